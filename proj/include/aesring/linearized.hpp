#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "aesring/gf256.hpp"
#include "aesring/permpoly.hpp"

namespace aesring {

/// L(u) = sum_{i=0..7} lambda_i u^(2^i); exactly the polynomials whose
/// evaluation maps are Z2-linear on F.
struct LinearizedPoly {
    std::array<Gf256, 8> lambda{};

    friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;
};

Gf256 eval(const LinearizedPoly& p, Gf256 a);

/// Embeds L(u) as a dense polynomial (nonzero degrees among the powers of 2).
PermPolynomial to_permpoly(const LinearizedPoly& p);

/// The S-box's inner linear map: f -> (z^4+z^3+z^2+z+1) f mod z^8+1.
/// Reduction is modulo z^8+1 (reducible), not modulo mu; on the byte this is
/// the XOR of the cyclic rotations by 0..4.
constexpr Gf256 l_map(Gf256 a) {
    const unsigned f = a.bits();
    unsigned r = 0;
    for (unsigned k = 0; k <= 4; ++k) r ^= ((f << k) | (f >> (8 - k))) & 0xFFu;
    return Gf256(static_cast<std::uint8_t>(r));
}

/// 8x8 matrix over Z2; bit j of rows[i] is the entry in row i, column j.
class BitMatrix8 {
public:
    constexpr BitMatrix8() = default;

    static constexpr BitMatrix8 identity() {
        BitMatrix8 m;
        for (int i = 0; i < 8; ++i) m.rows_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(1u << i);
        return m;
    }

    constexpr int operator()(int i, int j) const {
        return (rows_[static_cast<std::size_t>(i)] >> j) & 1;
    }
    constexpr void set(int i, int j, int v) {
        const auto mask = static_cast<std::uint8_t>(1u << j);
        if (v)
            rows_[static_cast<std::size_t>(i)] |= mask;
        else
            rows_[static_cast<std::size_t>(i)] &= static_cast<std::uint8_t>(~mask);
    }

    /// Matrix times bit column (bit k of the argument = row-k entry).
    constexpr std::uint8_t apply(std::uint8_t col) const {
        std::uint8_t out = 0;
        for (int i = 0; i < 8; ++i) {
            const auto parity = static_cast<unsigned>(rows_[static_cast<std::size_t>(i)] & col);
            if (__builtin_parity(parity)) out |= static_cast<std::uint8_t>(1u << i);
        }
        return out;
    }

    BitMatrix8 transposed() const;
    friend BitMatrix8 operator*(const BitMatrix8& a, const BitMatrix8& b);

    /// Gauss-Jordan over Z2; throws std::invalid_argument if singular.
    BitMatrix8 inverse() const;

    friend bool operator==(const BitMatrix8&, const BitMatrix8&) = default;

private:
    std::array<std::uint8_t, 8> rows_{};
};

/// 8x8 matrix over F (for the Moore matrices A and B).
class FieldMatrix8 {
public:
    constexpr FieldMatrix8() = default;

    static FieldMatrix8 identity();

    Gf256& at(int i, int j) { return m_[static_cast<std::size_t>(8 * i + j)]; }
    const Gf256& at(int i, int j) const { return m_[static_cast<std::size_t>(8 * i + j)]; }

    friend FieldMatrix8 operator*(const FieldMatrix8& a, const FieldMatrix8& b);
    friend bool operator==(const FieldMatrix8&, const FieldMatrix8&) = default;

private:
    std::array<Gf256, 64> m_{};
};

/// An ordered Z2-basis of F. Construction rejects dependent element sets.
class FieldBasis {
public:
    explicit FieldBasis(const std::array<Gf256, 8>& elements);

    static FieldBasis polynomial();          // 1, z, z^2, ..., z^7
    static FieldBasis normal(Gf256 generator);  // generator^(2^i), i = 0..7

    const Gf256& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

    /// Change-of-basis matrix S: row j holds the polynomial-basis
    /// coordinates of element j, so (e_0,...,e_7)^t = S (1,z,...,z^7)^t.
    BitMatrix8 change_of_basis() const;

    friend bool operator==(const FieldBasis&, const FieldBasis&) = default;

private:
    std::array<Gf256, 8> e_;
};

/// True iff the Frobenius orbit {a^(2^i)} is a basis of F over Z2.
bool is_normal(Gf256 a);

/// Moore matrix A of a basis: A[i][j] = basis_i^(2^j).
FieldMatrix8 moore_matrix(const FieldBasis& b);
/// Transposed-Moore form B: B[i][j] = basis_j^(2^i); AB = I8 iff dual pair.
FieldMatrix8 moore_matrix_cols(const FieldBasis& b);

/// The unique dual basis (Tr(alpha_i beta_j) = delta_ij), verified against
/// the trace conditions and the Moore-matrix identity before returning.
FieldBasis dual_basis(const FieldBasis& basis);

/// The circulant matrix of l_map in the polynomial basis (column k holds the
/// coordinates of l_map(z^k)).
BitMatrix8 l_matrix();

/// Coefficients of the unique linearized polynomial agreeing with the tabled
/// Z2-linear map, via the dual-basis formula B S M^t S^-1 (e_0,...,e_7)^t
/// computed relative to the given basis. Throws std::invalid_argument naming
/// a violating pair when the table is not linear.
LinearizedPoly linearize(const FuncTable& f, const FieldBasis& basis);
LinearizedPoly linearize(const FuncTable& f);  // polynomial basis

/// Coefficients of L^-1(u), the inverse of the S-box's inner linear map.
LinearizedPoly l_inverse();

/// First element (ascending byte order) that is primitive and generates a
/// normal basis; equals z^5+1 = 0x21.
Gf256 find_first_primitive_normal();

enum class SelfDualRule {
    exact_generator,  // dual generator beta must equal alpha itself
    frobenius_orbit,  // beta may be any alpha^(2^k)
};

/// Exhaustive scan for a self-dual normal basis generator, optionally
/// requiring primitivity. Empty when none exists.
std::optional<Gf256> self_dual_normal_search(bool require_primitive, SelfDualRule rule);

/// Search restricted to primitive generators; GF(256) has none, so this
/// returns empty under either matching rule.
std::optional<Gf256> self_dual_primitive_normal_search(
    SelfDualRule rule = SelfDualRule::exact_generator);

/// rho(u) = L^-1(u) + (z^2+1), the affine polynomial whose 254th power is the
/// inverse S-box polynomial.
PermPolynomial affine_rho();

/// 8 rows of 8 bits ('0'/'1'), one row per line.
std::string to_string(const BitMatrix8& m);

/// 8 field-polynomial strings, one per line.
std::string to_string(const FieldBasis& b);

}  // namespace aesring
