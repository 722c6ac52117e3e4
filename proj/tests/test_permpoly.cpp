#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "aesring/aes_core.hpp"
#include "aesring/permpoly.hpp"

using namespace aesring;

namespace {

// expected 9-term S-box polynomial, frozen from the published display
PermPolynomial expected_phi() {
    PermPolynomial p;
    p[254] = Gf256(0x05);
    p[253] = Gf256(0x09);
    p[251] = Gf256(0xF9);
    p[247] = Gf256(0x25);
    p[239] = Gf256(0xF4);
    p[223] = Gf256(0x01);
    p[191] = Gf256(0xB5);
    p[127] = Gf256(0x8F);
    p[0] = Gf256(0x63);
    return p;
}

FuncTable random_permutation(std::mt19937& rng) {
    std::array<std::uint8_t, 256> bytes;
    std::iota(bytes.begin(), bytes.end(), 0);
    std::shuffle(bytes.begin(), bytes.end(), rng);
    FuncTable t;
    for (int a = 0; a < 256; ++a) t[static_cast<std::size_t>(a)] = Gf256(bytes[static_cast<std::size_t>(a)]);
    return t;
}

}  // namespace

TEST_CASE("permpoly: evaluation") {
    const PermPolynomial phi = interpolate(sbox_table());
    CHECK(evaluate(phi, Gf256::zero()) == Gf256(0x63));

    PermPolynomial u254;
    u254[254] = Gf256::one();
    CHECK(evaluate(u254, Gf256::one()) == Gf256::one());
}

TEST_CASE("permpoly: Lagrange interpolants") {
    const PermPolynomial t0 = lagrange_interpolant(Gf256::zero());
    CHECK(evaluate(t0, Gf256::zero()) == Gf256::one());
    for (int a = 1; a < 256; ++a)
        CHECK(evaluate(t0, Gf256(static_cast<std::uint8_t>(a))) == Gf256::zero());

    const PermPolynomial t1 = lagrange_interpolant(Gf256::one());
    CHECK(evaluate(t1, Gf256::one()) == Gf256::one());

    std::mt19937 rng(7201);
    for (int n = 0; n < 4; ++n) {
        const Gf256 alpha(static_cast<std::uint8_t>(rng()));
        const PermPolynomial t = lagrange_interpolant(alpha);
        for (int b = 0; b < 256; ++b) {
            const Gf256 beta(static_cast<std::uint8_t>(b));
            CHECK(evaluate(t, beta) == (beta == alpha ? Gf256::one() : Gf256::zero()));
        }
    }

    // sum of alpha * T_alpha is the interpolant of the identity, i.e. u
    PermPolynomial ident;
    for (int a = 0; a < 256; ++a) {
        const PermPolynomial t = lagrange_interpolant(Gf256(static_cast<std::uint8_t>(a)));
        for (int d = 0; d < 256; ++d) ident[d] += Gf256(static_cast<std::uint8_t>(a)) * t[d];
    }
    CHECK(ident == PermPolynomial::identity());
    for (int n = 0; n < 20; ++n) {
        const Gf256 p(static_cast<std::uint8_t>(rng()));
        CHECK(evaluate(ident, p) == p);
    }

    // the plain sum of all T_alpha interpolates the constant-one function
    PermPolynomial ones;
    for (int a = 0; a < 256; ++a) {
        const PermPolynomial t = lagrange_interpolant(Gf256(static_cast<std::uint8_t>(a)));
        for (int d = 0; d < 256; ++d) ones[d] += t[d];
    }
    for (int a = 0; a < 256; ++a)
        CHECK(evaluate(ones, Gf256(static_cast<std::uint8_t>(a))) == Gf256::one());
}

TEST_CASE("permpoly: interpolation reproduces the published S-box polynomials") {
    FuncTable identity;
    for (int a = 0; a < 256; ++a) identity[static_cast<std::size_t>(a)] = Gf256(static_cast<std::uint8_t>(a));
    CHECK(interpolate(identity) == PermPolynomial::identity());

    CHECK(interpolate(sbox_table()) == expected_phi());

    const PermPolynomial psi = interpolate(inv_sbox_table());
    const Gf256 alpha(0x21);
    CHECK(psi[254] == Gf256(0x05));  // alpha^163
    CHECK(psi[254] == pow(alpha, 163));
    CHECK(psi[0] == Gf256(0x52));  // alpha^92
    CHECK(psi[0] == pow(alpha, 92));
    // a few more coefficients from the published table
    CHECK(psi[253] == pow(alpha, 76));
    CHECK(psi[252] == pow(alpha, 195));
    CHECK(psi[21] == alpha);
    CHECK(psi[1] == pow(alpha, 243));
}

TEST_CASE("permpoly: interpolation round-trips on random permutations") {
    std::mt19937 rng(7202);
    for (int n = 0; n < 20; ++n) {
        const PermutationTable t{random_permutation(rng)};
        const PermPolynomial p = interpolate(t);
        CHECK(tabulate(p) == t);
        CHECK(interpolate(t) == p);  // deterministic coefficients
    }
}

TEST_CASE("permpoly: composition") {
    const PermPolynomial phi = interpolate(sbox_table());
    const PermPolynomial psi = interpolate(inv_sbox_table());
    CHECK(compose(phi, psi) == PermPolynomial::identity());
    CHECK(compose(psi, phi) == PermPolynomial::identity());
    CHECK(compose(phi, PermPolynomial::identity()) == phi);

    std::mt19937 rng(7203);
    const FuncTable f = random_permutation(rng), g = random_permutation(rng);
    FuncTable fg;
    for (int a = 0; a < 256; ++a) fg[static_cast<std::size_t>(a)] = f[g[static_cast<std::size_t>(a)].bits()];
    CHECK(compose(interpolate(f), interpolate(g)) == interpolate(fg));

    for (int n = 0; n < 10; ++n) {
        const PermPolynomial p = interpolate(random_permutation(rng));
        const PermPolynomial q = interpolate(random_permutation(rng));
        const PermPolynomial r = interpolate(random_permutation(rng));
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    }
}

TEST_CASE("permpoly: pow_mod") {
    const PermPolynomial phi = interpolate(sbox_table());
    CHECK(pow_mod(phi, 1) == phi);

    const PermPolynomial u = PermPolynomial::identity();
    for (unsigned k : {0u, 2u, 17u, 254u, 255u}) {
        PermPolynomial expect;
        expect[static_cast<int>(k)] = Gf256::one();
        CHECK(pow_mod(u, k) == expect);
    }
}

TEST_CASE("permpoly: tabulate") {
    const PermutationTable id_t = tabulate(PermPolynomial::identity());
    for (int a = 0; a < 256; ++a)
        CHECK(id_t[Gf256(static_cast<std::uint8_t>(a))] == Gf256(static_cast<std::uint8_t>(a)));

    CHECK(tabulate(interpolate(sbox_table())) == sbox_table());

    PermPolynomial frob;  // u^2 is bijective (Frobenius)
    frob[2] = Gf256::one();
    CHECK_NOTHROW(tabulate(frob));

    PermPolynomial constant;
    constant[0] = Gf256(0x05);
    CHECK_THROWS_WITH_AS(tabulate(constant),
                         "permutation table: 0x00 and 0x01 both map to 0x05",
                         std::invalid_argument);
}

TEST_CASE("permpoly: sparsity") {
    CHECK(sparsity(interpolate(sbox_table())) == 9);
    CHECK(sparsity(PermPolynomial()) == 0);
    CHECK(sparsity(interpolate(inv_sbox_table())) == 255);
}

TEST_CASE("permpoly: textual forms round-trip") {
    const PermPolynomial phi = interpolate(sbox_table());
    CHECK(parse_permpoly(to_string(phi)) == phi);
    const PermPolynomial psi = interpolate(inv_sbox_table());
    CHECK(parse_permpoly(to_string(psi)) == psi);
    CHECK(parse_permpoly(to_coeff_hex(psi)) == psi);
    CHECK(to_coeff_hex(PermPolynomial()).size() == 512);
    CHECK(to_string(PermPolynomial()) == "0");
    CHECK(parse_permpoly("0") == PermPolynomial());

    CHECK(to_string(phi).substr(0, 14) == "(z^2+1)·u^254");

    CHECK_THROWS_AS(parse_permpoly("(z)·u^256"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permpoly("(z)u^2"), std::invalid_argument);
}
