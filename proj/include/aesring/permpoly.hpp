#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "aesring/gf256.hpp"

namespace aesring {

/// Value table of a function F -> F, indexed by the byte encoding.
using FuncTable = std::array<Gf256, 256>;

/// Polynomial over F of degree <= 255; coefficient of u^d at index d.
class PermPolynomial {
public:
    constexpr PermPolynomial() = default;

    constexpr Gf256& operator[](int d) { return c_[static_cast<std::size_t>(d)]; }
    constexpr const Gf256& operator[](int d) const { return c_[static_cast<std::size_t>(d)]; }

    /// The monomial u.
    static constexpr PermPolynomial identity() {
        PermPolynomial p;
        p[1] = Gf256::one();
        return p;
    }

    friend constexpr PermPolynomial operator+(const PermPolynomial& a, const PermPolynomial& b) {
        PermPolynomial r;
        for (int d = 0; d < 256; ++d) r[d] = a[d] + b[d];
        return r;
    }
    friend constexpr bool operator==(const PermPolynomial& a, const PermPolynomial& b) {
        return a.c_ == b.c_;
    }

private:
    std::array<Gf256, 256> c_{};
};

/// A permutation of F as a 256-entry lookup table. Construction checks
/// bijectivity and names a colliding pair on failure.
class PermutationTable {
public:
    explicit PermutationTable(const FuncTable& images);

    Gf256 operator[](Gf256 a) const { return images_[a.bits()]; }
    const FuncTable& images() const { return images_; }

    friend bool operator==(const PermutationTable& a, const PermutationTable& b) {
        return a.images_ == b.images_;
    }

private:
    FuncTable images_;
};

/// Horner evaluation of p at a.
Gf256 evaluate(const PermPolynomial& p, Gf256 a);

/// The unique degree-<=255 interpolant with T_alpha(beta) = [alpha == beta]:
/// u * sum_{i=0..254} alpha^i u^(254-i) for alpha != 0, u^255 + 1 for alpha = 0.
PermPolynomial lagrange_interpolant(Gf256 alpha);

/// Unique degree-<=255 polynomial through all 256 points of the table
/// (sum of t[alpha] * T_alpha); defined for any function table.
PermPolynomial interpolate(const FuncTable& t);
PermPolynomial interpolate(const PermutationTable& t);

/// p(q(u)) mod u^256+u, computed by interpolating the pointwise composition
/// (identical to symbolic substitution for maps on F).
PermPolynomial compose(const PermPolynomial& p, const PermPolynomial& q);

/// p(u)^n mod u^256+u by square-and-multiply on coefficient vectors.
PermPolynomial pow_mod(const PermPolynomial& p, unsigned n);

/// Value table of p; throws std::invalid_argument naming a colliding pair
/// when the evaluation map is not bijective.
PermutationTable tabulate(const PermPolynomial& p);

/// Number of nonzero coefficients.
int sparsity(const PermPolynomial& p);

/// Sum of "(<field-poly>)·u^d" terms with descending d, zero terms omitted;
/// "0" for the zero polynomial.
std::string to_string(const PermPolynomial& p);

/// Machine form: 512 lowercase hex digits, coefficient of u^0 first.
std::string to_coeff_hex(const PermPolynomial& p);

/// Parses either the term form or the 512-digit machine form.
PermPolynomial parse_permpoly(std::string_view s);

}  // namespace aesring
