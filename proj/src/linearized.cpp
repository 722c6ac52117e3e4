#include "aesring/linearized.hpp"

#include <stdexcept>

namespace aesring {

Gf256 eval(const LinearizedPoly& p, Gf256 a) {
    Gf256 acc = Gf256::zero();
    Gf256 q = a;  // a^(2^i)
    for (int i = 0; i < 8; ++i) {
        acc += p.lambda[static_cast<std::size_t>(i)] * q;
        q *= q;
    }
    return acc;
}

PermPolynomial to_permpoly(const LinearizedPoly& p) {
    PermPolynomial out;
    for (int i = 0; i < 8; ++i) out[1 << i] += p.lambda[static_cast<std::size_t>(i)];
    return out;
}

BitMatrix8 BitMatrix8::transposed() const {
    BitMatrix8 t;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) t.set(j, i, (*this)(i, j));
    return t;
}

BitMatrix8 operator*(const BitMatrix8& a, const BitMatrix8& b) {
    // (a*b)(i,j) = parity(row_i(a) & col_j(b)) = bit j of b^t applied to row_i(a)
    const BitMatrix8 bt = b.transposed();
    BitMatrix8 r;
    for (int i = 0; i < 8; ++i)
        r.rows_[static_cast<std::size_t>(i)] = bt.apply(a.rows_[static_cast<std::size_t>(i)]);
    return r;
}

BitMatrix8 BitMatrix8::inverse() const {
    // rows augmented with the identity in the high byte
    std::array<std::uint16_t, 8> aug;
    for (int i = 0; i < 8; ++i)
        aug[static_cast<std::size_t>(i)] =
            static_cast<std::uint16_t>(rows_[static_cast<std::size_t>(i)] | (1u << (8 + i)));
    int rank = 0;
    for (int col = 0; col < 8; ++col) {
        int piv = -1;
        for (int r = rank; r < 8; ++r)
            if ((aug[static_cast<std::size_t>(r)] >> col) & 1) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("bit matrix: singular");
        std::swap(aug[static_cast<std::size_t>(rank)], aug[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < 8; ++r)
            if (r != rank && ((aug[static_cast<std::size_t>(r)] >> col) & 1))
                aug[static_cast<std::size_t>(r)] ^= aug[static_cast<std::size_t>(rank)];
        ++rank;
    }
    BitMatrix8 inv;
    for (int r = 0; r < 8; ++r) {
        // after full Gauss-Jordan, row r has its leading 1 at column r
        inv.rows_[static_cast<std::size_t>(r)] =
            static_cast<std::uint8_t>(aug[static_cast<std::size_t>(r)] >> 8);
    }
    return inv;
}

FieldMatrix8 FieldMatrix8::identity() {
    FieldMatrix8 m;
    for (int i = 0; i < 8; ++i) m.at(i, i) = Gf256::one();
    return m;
}

FieldMatrix8 operator*(const FieldMatrix8& a, const FieldMatrix8& b) {
    FieldMatrix8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Gf256 acc = Gf256::zero();
            for (int k = 0; k < 8; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

namespace {

bool independent(const std::array<Gf256, 8>& e) {
    std::array<std::uint8_t, 8> rows;
    for (int i = 0; i < 8; ++i) rows[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)].bits();
    int rank = 0;
    for (int col = 0; col < 8 && rank < 8; ++col) {
        int piv = -1;
        for (int r = rank; r < 8; ++r)
            if ((rows[static_cast<std::size_t>(r)] >> col) & 1) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < 8; ++r)
            if (r != rank && ((rows[static_cast<std::size_t>(r)] >> col) & 1))
                rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank == 8;
}

}  // namespace

FieldBasis::FieldBasis(const std::array<Gf256, 8>& elements) : e_(elements) {
    if (!independent(e_))
        throw std::invalid_argument("field basis: elements are Z2-linearly dependent");
}

FieldBasis FieldBasis::polynomial() {
    std::array<Gf256, 8> e;
    for (int i = 0; i < 8; ++i) e[static_cast<std::size_t>(i)] = Gf256(static_cast<std::uint8_t>(1u << i));
    return FieldBasis(e);
}

FieldBasis FieldBasis::normal(Gf256 generator) {
    std::array<Gf256, 8> e;
    Gf256 p = generator;
    for (int i = 0; i < 8; ++i) {
        e[static_cast<std::size_t>(i)] = p;
        p *= p;
    }
    return FieldBasis(e);  // the independence check rejects non-normal generators
}

BitMatrix8 FieldBasis::change_of_basis() const {
    BitMatrix8 s;
    for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) s.set(j, k, (e_[static_cast<std::size_t>(j)].bits() >> k) & 1);
    return s;
}

bool is_normal(Gf256 a) {
    if (a.is_zero()) return false;
    std::array<Gf256, 8> e;
    Gf256 p = a;
    for (int i = 0; i < 8; ++i) {
        e[static_cast<std::size_t>(i)] = p;
        p *= p;
    }
    return independent(e);
}

FieldMatrix8 moore_matrix(const FieldBasis& b) {
    FieldMatrix8 m;
    for (int i = 0; i < 8; ++i) {
        Gf256 p = b[i];
        for (int j = 0; j < 8; ++j) {
            m.at(i, j) = p;
            p *= p;
        }
    }
    return m;
}

FieldMatrix8 moore_matrix_cols(const FieldBasis& b) {
    FieldMatrix8 m;
    for (int j = 0; j < 8; ++j) {
        Gf256 p = b[j];
        for (int i = 0; i < 8; ++i) {
            m.at(i, j) = p;
            p *= p;
        }
    }
    return m;
}

FieldBasis dual_basis(const FieldBasis& basis) {
    // Tr(alpha_i beta_j) = delta_ij is Z2-linear in the coordinates of
    // beta_j: with M[i][k] = Tr(alpha_i z^k), the coordinate column of
    // beta_j is column j of M^-1.
    BitMatrix8 m;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k)
            m.set(i, k, trace(basis[i] * Gf256(static_cast<std::uint8_t>(1u << k))));
    const BitMatrix8 mi = m.inverse();

    std::array<Gf256, 8> duals;
    for (int j = 0; j < 8; ++j) {
        std::uint8_t bitsv = 0;
        for (int k = 0; k < 8; ++k)
            if (mi(k, j)) bitsv |= static_cast<std::uint8_t>(1u << k);
        duals[static_cast<std::size_t>(j)] = Gf256(bitsv);
    }
    FieldBasis result(duals);

    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (trace(basis[i] * result[j]) != (i == j ? 1 : 0))
                throw std::logic_error("dual basis: trace condition violated");
    if (!(moore_matrix(basis) * moore_matrix_cols(result) == FieldMatrix8::identity()))
        throw std::logic_error("dual basis: Moore matrix product is not the identity");
    return result;
}

BitMatrix8 l_matrix() {
    BitMatrix8 m;
    for (int k = 0; k < 8; ++k) {
        const std::uint8_t img = l_map(Gf256(static_cast<std::uint8_t>(1u << k))).bits();
        for (int i = 0; i < 8; ++i) m.set(i, k, (img >> i) & 1);
    }
    return m;
}

LinearizedPoly linearize(const FuncTable& f, const FieldBasis& basis) {
    const auto report_nonlinear = [&]() {
        for (int a = 0; a < 256; ++a)
            for (int b = a; b < 256; ++b) {
                const Gf256 ga(static_cast<std::uint8_t>(a)), gb(static_cast<std::uint8_t>(b));
                if (!(f[(ga + gb).bits()] == f[ga.bits()] + f[gb.bits()]))
                    throw std::invalid_argument("linearize: table is not Z2-linear: f(" +
                                                to_hex(ga) + "+" + to_hex(gb) + ") != f(" +
                                                to_hex(ga) + ")+f(" + to_hex(gb) + ")");
            }
        throw std::logic_error("linearize: internal mismatch on a linear table");
    };

    // map matrix in the polynomial basis: column k = coordinates of f(z^k)
    BitMatrix8 p;
    for (int k = 0; k < 8; ++k) {
        const std::uint8_t img = f[1u << k].bits();
        for (int i = 0; i < 8; ++i) p.set(i, k, (img >> i) & 1);
    }

    const BitMatrix8 s = basis.change_of_basis();
    const BitMatrix8 n = s * p.transposed() * s.inverse();

    // v = N (e_0,...,e_7)^t, entries are XORs of basis elements
    std::array<Gf256, 8> v{};
    for (int j = 0; j < 8; ++j)
        for (int l = 0; l < 8; ++l)
            if (n(j, l)) v[static_cast<std::size_t>(j)] += basis[l];

    // lambda = B v with B[i][j] = beta_j^(2^i)
    const FieldBasis duals = dual_basis(basis);
    LinearizedPoly out;
    for (int i = 0; i < 8; ++i) {
        Gf256 acc = Gf256::zero();
        for (int j = 0; j < 8; ++j)
            acc += pow(duals[j], 1u << i) * v[static_cast<std::size_t>(j)];
        out.lambda[static_cast<std::size_t>(i)] = acc;
    }

    for (int a = 0; a < 256; ++a)
        if (!(eval(out, Gf256(static_cast<std::uint8_t>(a))) == f[static_cast<std::size_t>(a)]))
            report_nonlinear();
    return out;
}

LinearizedPoly linearize(const FuncTable& f) { return linearize(f, FieldBasis::polynomial()); }

LinearizedPoly l_inverse() {
    FuncTable inv_table;
    for (int a = 0; a < 256; ++a)
        inv_table[l_map(Gf256(static_cast<std::uint8_t>(a))).bits()] =
            Gf256(static_cast<std::uint8_t>(a));
    return linearize(inv_table);
}

Gf256 find_first_primitive_normal() {
    for (int a = 0; a < 256; ++a) {
        const Gf256 g(static_cast<std::uint8_t>(a));
        if (is_primitive(g) && is_normal(g)) return g;
    }
    throw std::logic_error("no primitive normal basis generator found");
}

std::optional<Gf256> self_dual_normal_search(bool require_primitive, SelfDualRule rule) {
    for (int a = 1; a < 256; ++a) {
        const Gf256 g(static_cast<std::uint8_t>(a));
        if (require_primitive && !is_primitive(g)) continue;
        if (!is_normal(g)) continue;
        const FieldBasis nb = FieldBasis::normal(g);
        const Gf256 beta = dual_basis(nb)[0];
        if (rule == SelfDualRule::exact_generator) {
            if (beta == g) return g;
        } else {
            for (int k = 0; k < 8; ++k)
                if (beta == nb[k]) return g;
        }
    }
    return std::nullopt;
}

std::optional<Gf256> self_dual_primitive_normal_search(SelfDualRule rule) {
    return self_dual_normal_search(true, rule);
}

PermPolynomial affine_rho() {
    PermPolynomial rho = to_permpoly(l_inverse());
    rho[0] += Gf256(0x05);  // L^-1 applied to the affine constant z^6+z^5+z+1
    return rho;
}

std::string to_string(const BitMatrix8& m) {
    std::string s;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) s += m(i, j) ? '1' : '0';
        if (i != 7) s += '\n';
    }
    return s;
}

std::string to_string(const FieldBasis& b) {
    std::string s;
    for (int i = 0; i < 8; ++i) {
        s += to_poly(b[i]);
        if (i != 7) s += '\n';
    }
    return s;
}

}  // namespace aesring
