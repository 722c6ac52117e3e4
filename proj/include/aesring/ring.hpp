#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "aesring/gf256.hpp"

namespace aesring {

/// A 16-byte block, the wire form of a ring element (b[i+4j] <-> r_{i,j}).
using Block = std::array<std::uint8_t, 16>;

/// Element of R = F[x,y]/(x^4+1, y^4+1). Entry (i,j) is the coefficient
/// of x^i y^j. Addition is entrywise; multiplication reduces the x and y
/// exponents mod 4, which is the normal form for this ideal.
class RingElement {
public:
    constexpr RingElement() = default;

    constexpr Gf256& at(int i, int j) { return c_[static_cast<std::size_t>(i + 4 * j)]; }
    constexpr const Gf256& at(int i, int j) const {
        return c_[static_cast<std::size_t>(i + 4 * j)];
    }

    static constexpr RingElement one() {
        RingElement r;
        r.at(0, 0) = Gf256::one();
        return r;
    }

    friend constexpr RingElement operator+(const RingElement& a, const RingElement& b) {
        RingElement r;
        for (std::size_t k = 0; k < 16; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    constexpr RingElement& operator+=(const RingElement& b) {
        for (std::size_t k = 0; k < 16; ++k) c_[k] += b.c_[k];
        return *this;
    }

    friend constexpr RingElement operator*(const RingElement& a, const RingElement& b) {
        RingElement r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const Gf256 av = a.at(i, j);
                if (av.is_zero()) continue;
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l)
                        r.at((i + k) & 3, (j + l) & 3) += av * b.at(k, l);
            }
        return r;
    }

    friend constexpr bool operator==(const RingElement& a, const RingElement& b) {
        return a.c_ == b.c_;
    }

private:
    std::array<Gf256, 16> c_{};
};

constexpr RingElement pow(const RingElement& a, unsigned n) {
    RingElement r = RingElement::one();
    RingElement base = a;
    while (n != 0) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

/// gamma = (z+1)x^3 + x^2 + x + z, the MixColumn constant; order 4 in R.
constexpr RingElement gamma() {
    RingElement g;
    g.at(3, 0) = Gf256(0x03);
    g.at(2, 0) = Gf256(0x01);
    g.at(1, 0) = Gf256(0x01);
    g.at(0, 0) = Gf256(0x02);
    return g;
}

/// gamma^-1 = (z^3+z+1)x^3 + (z^3+z^2+1)x^2 + (z^3+1)x + (z^3+z^2+z).
constexpr RingElement gamma_inv() {
    RingElement g;
    g.at(3, 0) = Gf256(0x0B);
    g.at(2, 0) = Gf256(0x0D);
    g.at(1, 0) = Gf256(0x09);
    g.at(0, 0) = Gf256(0x0E);
    return g;
}

/// ShiftRow substitution r(x,y) -> r(xy^3, y): x^i y^j -> x^i y^(3i+j).
constexpr RingElement shift_rows(const RingElement& r) {
    RingElement out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, (3 * i + j) & 3) = r.at(i, j);
    return out;
}

/// Inverse substitution r(x,y) -> r(xy, y): x^i y^j -> x^i y^(i+j).
constexpr RingElement inv_shift_rows(const RingElement& r) {
    RingElement out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, (i + j) & 3) = r.at(i, j);
    return out;
}

constexpr Block to_block(const RingElement& r) {
    Block b{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) b[static_cast<std::size_t>(i + 4 * j)] = r.at(i, j).bits();
    return b;
}

constexpr RingElement from_block(const Block& b) {
    RingElement r;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) r.at(i, j) = Gf256(b[static_cast<std::size_t>(i + 4 * j)]);
    return r;
}

/// Sum of "(<field-poly>)·x^i·y^j" terms in lexicographic (i,j) order,
/// zero terms omitted; "0" for the zero element.
std::string to_string(const RingElement& r);

/// Parses the canonical textual form; throws std::invalid_argument.
RingElement parse_ring(std::string_view s);

/// 32 lowercase hex digits.
std::string block_to_hex(const Block& b);

/// Accepts 32 hex digits, case-insensitive, optional 0x prefix.
Block block_from_hex(std::string_view s);

}  // namespace aesring
