#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace aesring {

class Gf256;

namespace detail {

// Low byte of mu(z) = z^8 + z^4 + z^3 + z + 1, the reduction polynomial.
inline constexpr std::uint8_t kMuLow = 0x1B;

constexpr std::uint8_t mul_bits(std::uint8_t a, std::uint8_t b) {
    std::uint8_t r = 0;
    for (int i = 0; i < 8; ++i) {
        if (b & 1) r ^= a;
        const bool carry = (a & 0x80) != 0;
        a = static_cast<std::uint8_t>(a << 1);
        if (carry) a ^= kMuLow;
        b >>= 1;
    }
    return r;
}

// Log/antilog tables for the generator z+1 (0x03). exp is doubled so that
// exp[log a + log b] never needs a modular reduction.
struct GfTables {
    std::array<std::uint8_t, 510> exp{};
    std::array<std::uint8_t, 256> log{};
};

constexpr GfTables make_tables() {
    GfTables t{};
    std::uint8_t p = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[static_cast<std::size_t>(i)] = p;
        t.exp[static_cast<std::size_t>(i) + 255] = p;
        t.log[p] = static_cast<std::uint8_t>(i);
        p = mul_bits(p, 0x03);
    }
    return t;
}

inline constexpr GfTables kTables = make_tables();

}  // namespace detail

/// Element of F = Z2[z]/(z^8+z^4+z^3+z+1) = GF(256).
/// Bit i of the byte encoding is the coefficient of z^i.
class Gf256 {
public:
    constexpr Gf256() = default;
    constexpr explicit Gf256(std::uint8_t bits) : v_(bits) {}

    constexpr std::uint8_t bits() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    static constexpr Gf256 zero() { return Gf256(0x00); }
    static constexpr Gf256 one() { return Gf256(0x01); }
    static constexpr Gf256 z() { return Gf256(0x02); }

    friend constexpr Gf256 operator+(Gf256 a, Gf256 b) {
        return Gf256(static_cast<std::uint8_t>(a.v_ ^ b.v_));
    }
    constexpr Gf256& operator+=(Gf256 b) {
        v_ ^= b.v_;
        return *this;
    }

    friend constexpr Gf256 operator*(Gf256 a, Gf256 b) {
        if (a.v_ == 0 || b.v_ == 0) return zero();
        return Gf256(detail::kTables.exp[static_cast<std::size_t>(detail::kTables.log[a.v_]) +
                                         detail::kTables.log[b.v_]]);
    }
    constexpr Gf256& operator*=(Gf256 b) {
        *this = *this * b;
        return *this;
    }

    friend constexpr bool operator==(Gf256 a, Gf256 b) { return a.v_ == b.v_; }

private:
    std::uint8_t v_ = 0;
};

/// Shift-and-reduce product, independent of the log/antilog tables.
/// The table-driven operator* must agree with it on all 65536 pairs.
constexpr Gf256 mul_noref(Gf256 a, Gf256 b) {
    return Gf256(detail::mul_bits(a.bits(), b.bits()));
}

/// a^n by square-and-multiply; pow(0,0) = 1 (empty product).
constexpr Gf256 pow(Gf256 a, unsigned n) {
    Gf256 r = Gf256::one();
    while (n != 0) {
        if (n & 1u) r *= a;
        a *= a;
        n >>= 1;
    }
    return r;
}

/// Multiplicative inverse; throws std::domain_error for 0.
Gf256 inv(Gf256 a);

/// Absolute trace Tr(a) = sum of a^(2^i), i = 0..7; always 0 or 1.
constexpr int trace(Gf256 a) {
    Gf256 acc = Gf256::zero();
    Gf256 p = a;
    for (int i = 0; i < 8; ++i) {
        acc += p;
        p *= p;
    }
    return acc.bits();
}

/// True iff the multiplicative order of a is exactly 255.
constexpr bool is_primitive(Gf256 a) {
    if (a.is_zero()) return false;
    // 255 = 3 * 5 * 17; order is 255 iff a^(255/p) != 1 for each prime p.
    return !(pow(a, 85) == Gf256::one()) && !(pow(a, 51) == Gf256::one()) &&
           !(pow(a, 15) == Gf256::one());
}

/// Canonical hex form, e.g. "0x63".
std::string to_hex(Gf256 a);

/// Canonical polynomial form with descending powers, e.g. "z^6+z^5+z+1";
/// "0" and "1" for the constants.
std::string to_poly(Gf256 a);

/// Parses either canonical form; throws std::invalid_argument otherwise.
Gf256 parse_field(std::string_view s);

std::ostream& operator<<(std::ostream& os, Gf256 a);

}  // namespace aesring
