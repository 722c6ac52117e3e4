#include <doctest.h>

#include <random>
#include <stdexcept>

#include "aesring/gf256.hpp"

using namespace aesring;

TEST_CASE("gf256: addition is XOR with the expected identities") {
    CHECK(Gf256(0x57) + Gf256(0x57) == Gf256::zero());
    CHECK(Gf256(0x00) + Gf256(0xAB) == Gf256(0xAB));
    // (z^6+z^5+z+1) + (z^2+1) = z^6+z^5+z^2+z
    CHECK(Gf256(0x63) + Gf256(0x05) == Gf256(0x66));
}

TEST_CASE("gf256: multiplication reduces modulo mu") {
    // z * z^7 = z^8 = z^4+z^3+z+1
    CHECK(Gf256(0x02) * Gf256(0x80) == Gf256(0x1B));
    for (int a = 0; a < 256; ++a) {
        CHECK(Gf256::one() * Gf256(static_cast<std::uint8_t>(a)) == Gf256(static_cast<std::uint8_t>(a)));
        CHECK(Gf256(static_cast<std::uint8_t>(a)) * Gf256::zero() == Gf256::zero());
    }
}

TEST_CASE("gf256: table-driven product agrees with shift-and-reduce on all pairs") {
    for (int a = 0; a < 256; ++a)
        for (int b = 0; b < 256; ++b) {
            const Gf256 ga(static_cast<std::uint8_t>(a)), gb(static_cast<std::uint8_t>(b));
            REQUIRE(ga * gb == mul_noref(ga, gb));
        }
}

TEST_CASE("gf256: distributivity on random triples") {
    std::mt19937 rng(7001);
    for (int n = 0; n < 10000; ++n) {
        const Gf256 a(static_cast<std::uint8_t>(rng())), b(static_cast<std::uint8_t>(rng())),
            c(static_cast<std::uint8_t>(rng()));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("gf256: inverses") {
    CHECK(inv(Gf256::one()) == Gf256::one());
    CHECK_THROWS_AS(inv(Gf256::zero()), std::domain_error);

    std::mt19937 rng(7002);
    int done = 0;
    while (done < 50) {
        const Gf256 a(static_cast<std::uint8_t>(rng()));
        if (a.is_zero()) continue;
        CHECK(inv(a) == pow(a, 254));  // table path vs square-and-multiply path
        ++done;
    }
    for (int a = 1; a < 256; ++a) {
        const Gf256 g(static_cast<std::uint8_t>(a));
        CHECK(g * inv(g) == Gf256::one());
        CHECK(pow(g, 255) == Gf256::one());
    }
}

TEST_CASE("gf256: pow conventions") {
    CHECK(pow(Gf256::zero(), 0) == Gf256::one());
    CHECK(pow(Gf256(0x7F), 0) == Gf256::one());
    CHECK(pow(Gf256(0x21), 1) == Gf256(0x21));  // alpha = z^5+1
}

TEST_CASE("gf256: trace is Z2-linear and surjective") {
    CHECK(trace(Gf256::zero()) == 0);
    for (int a = 0; a < 256; ++a) {
        const int t = trace(Gf256(static_cast<std::uint8_t>(a)));
        CHECK((t == 0 || t == 1));
    }
    std::mt19937 rng(7003);
    for (int n = 0; n < 50; ++n) {
        const Gf256 a(static_cast<std::uint8_t>(rng())), b(static_cast<std::uint8_t>(rng()));
        CHECK((trace(a) ^ trace(b)) == trace(a + b));
    }
    int ones = 0;
    for (int a = 0; a < 256; ++a) ones += trace(Gf256(static_cast<std::uint8_t>(a)));
    CHECK(ones == 128);  // surjective, balanced
}

TEST_CASE("gf256: trace pairing of the dual normal bases") {
    // alpha = z^5+1 and beta = z^5+z^4+z^2+1 generate dual normal bases
    Gf256 alpha_i(0x21);
    for (int i = 0; i < 8; ++i) {
        Gf256 beta_j(0x35);
        for (int j = 0; j < 8; ++j) {
            CHECK(trace(alpha_i * beta_j) == (i == j ? 1 : 0));
            beta_j *= beta_j;
        }
        alpha_i *= alpha_i;
    }
}

TEST_CASE("gf256: primitivity") {
    CHECK(is_primitive(Gf256(0x21)));
    CHECK_FALSE(is_primitive(Gf256::one()));
    CHECK_FALSE(is_primitive(Gf256::zero()));
    int count = 0;
    for (int a = 0; a < 256; ++a)
        if (is_primitive(Gf256(static_cast<std::uint8_t>(a)))) ++count;
    CHECK(count == 128);  // Euler phi of 255
}

TEST_CASE("gf256: textual forms round-trip") {
    for (int a = 0; a < 256; ++a) {
        const Gf256 g(static_cast<std::uint8_t>(a));
        CHECK(parse_field(to_hex(g)) == g);
        CHECK(parse_field(to_poly(g)) == g);
    }
    CHECK(to_hex(Gf256(0x63)) == "0x63");
    CHECK(to_hex(Gf256(0xAB)) == "0xAB");
    CHECK(to_poly(Gf256(0x63)) == "z^6+z^5+z+1");
    CHECK(to_poly(Gf256::zero()) == "0");
    CHECK(to_poly(Gf256::one()) == "1");
    CHECK(parse_field("z^6+z^5+z+1") == Gf256(0x63));

    CHECK_THROWS_AS(parse_field(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("0x1FF"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("z^8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("w+1"), std::invalid_argument);
}
