#include "aesring/permpoly.hpp"

#include <stdexcept>

namespace aesring {

PermutationTable::PermutationTable(const FuncTable& images) : images_(images) {
    std::array<int, 256> preimage;
    preimage.fill(-1);
    for (int a = 0; a < 256; ++a) {
        const std::uint8_t img = images_[static_cast<std::size_t>(a)].bits();
        if (preimage[img] >= 0)
            throw std::invalid_argument(
                "permutation table: " + to_hex(Gf256(static_cast<std::uint8_t>(preimage[img]))) +
                " and " + to_hex(Gf256(static_cast<std::uint8_t>(a))) + " both map to " +
                to_hex(Gf256(img)));
        preimage[img] = a;
    }
}

Gf256 evaluate(const PermPolynomial& p, Gf256 a) {
    Gf256 acc = Gf256::zero();
    for (int d = 255; d >= 0; --d) acc = acc * a + p[d];
    return acc;
}

PermPolynomial lagrange_interpolant(Gf256 alpha) {
    PermPolynomial t;
    if (alpha.is_zero()) {
        t[255] = Gf256::one();
        t[0] = Gf256::one();
        return t;
    }
    Gf256 p = Gf256::one();  // alpha^i, i ascending; lands at degree 255-i
    for (int d = 255; d >= 1; --d) {
        t[d] = p;
        p *= alpha;
    }
    return t;
}

PermPolynomial interpolate(const FuncTable& t) {
    PermPolynomial out;
    for (int a = 0; a < 256; ++a) {
        const Gf256 v = t[static_cast<std::size_t>(a)];
        if (v.is_zero()) continue;
        if (a == 0) {
            out[255] += v;
            out[0] += v;
            continue;
        }
        const Gf256 alpha(static_cast<std::uint8_t>(a));
        Gf256 p = Gf256::one();
        for (int d = 255; d >= 1; --d) {
            out[d] += v * p;
            p *= alpha;
        }
    }
    return out;
}

PermPolynomial interpolate(const PermutationTable& t) { return interpolate(t.images()); }

PermPolynomial compose(const PermPolynomial& p, const PermPolynomial& q) {
    FuncTable t;
    for (int a = 0; a < 256; ++a)
        t[static_cast<std::size_t>(a)] = evaluate(p, evaluate(q, Gf256(static_cast<std::uint8_t>(a))));
    return interpolate(t);
}

namespace {

// Product mod u^256+u: exponents e >= 256 fold to e-255 (u^256 = u).
PermPolynomial mul_mod(const PermPolynomial& a, const PermPolynomial& b) {
    std::array<Gf256, 511> prod{};
    for (int i = 0; i < 256; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < 256; ++j)
            if (!b[j].is_zero()) prod[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    PermPolynomial out;
    for (int e = 0; e < 256; ++e) out[e] = prod[static_cast<std::size_t>(e)];
    for (int e = 256; e < 511; ++e) out[e - 255] += prod[static_cast<std::size_t>(e)];
    return out;
}

}  // namespace

PermPolynomial pow_mod(const PermPolynomial& p, unsigned n) {
    PermPolynomial r;
    r[0] = Gf256::one();
    PermPolynomial base = p;
    while (n != 0) {
        if (n & 1u) r = mul_mod(r, base);
        base = mul_mod(base, base);
        n >>= 1;
    }
    return r;
}

PermutationTable tabulate(const PermPolynomial& p) {
    FuncTable t;
    for (int a = 0; a < 256; ++a)
        t[static_cast<std::size_t>(a)] = evaluate(p, Gf256(static_cast<std::uint8_t>(a)));
    return PermutationTable(t);
}

int sparsity(const PermPolynomial& p) {
    int n = 0;
    for (int d = 0; d < 256; ++d)
        if (!p[d].is_zero()) ++n;
    return n;
}

std::string to_string(const PermPolynomial& p) {
    std::string s;
    for (int d = 255; d >= 0; --d) {
        if (p[d].is_zero()) continue;
        if (!s.empty()) s += '+';
        s += '(';
        s += to_poly(p[d]);
        s += ")·u^";
        s += std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

std::string to_coeff_hex(const PermPolynomial& p) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(512);
    for (int d = 0; d < 256; ++d) {
        s += digits[p[d].bits() >> 4];
        s += digits[p[d].bits() & 0x0F];
    }
    return s;
}

PermPolynomial parse_permpoly(std::string_view s) {
    PermPolynomial p;
    if (s == "0") return p;

    const auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (s.size() == 512) {
        bool all_hex = true;
        for (char c : s)
            if (nib(c) < 0) {
                all_hex = false;
                break;
            }
        if (all_hex) {
            for (int d = 0; d < 256; ++d)
                p[d] = Gf256(static_cast<std::uint8_t>(
                    (nib(s[static_cast<std::size_t>(2 * d)]) << 4) |
                    nib(s[static_cast<std::size_t>(2 * d + 1)])));
            return p;
        }
    }

    const auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("permpoly: ") + what);
    };
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(') fail("expected '('");
        const std::size_t close = s.find(')', pos);
        if (close == std::string_view::npos) fail("unterminated coefficient");
        const Gf256 c = parse_field(s.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        static constexpr std::string_view kSep = "·u^";
        if (s.substr(pos, kSep.size()) != kSep) fail("malformed term");
        pos += kSep.size();
        std::size_t end = pos;
        while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
        if (end == pos) fail("missing degree");
        int d = 0;
        for (std::size_t i = pos; i < end; ++i) d = d * 10 + (s[i] - '0');
        if (d > 255) fail("degree out of range");
        p[d] += c;
        pos = end;
        if (pos < s.size()) {
            if (s[pos] != '+') fail("expected '+'");
            ++pos;
        }
    }
    return p;
}

}  // namespace aesring
