#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "aesring/aes_core.hpp"
#include "aesring/reference_aes.hpp"

using namespace aesring;

namespace {

std::vector<std::uint8_t> from_hex(const std::string& s) {
    std::vector<std::uint8_t> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(std::stoi(s.substr(2 * i, 2), nullptr, 16));
    return out;
}

Block random_block(std::mt19937& rng) {
    Block b;
    for (auto& v : b) v = static_cast<std::uint8_t>(rng());
    return b;
}

// sum over i,j of phi(m_{i,j}) x^i y^(3i+j): the shared body of every
// encryption round, reassembled from public primitives for negative tests
RingElement sub_shift(const RingElement& r) {
    RingElement out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, (3 * i + j) & 3) = sbox_table()[r.at(i, j)];
    return out;
}

}  // namespace

TEST_CASE("aes_core: variant parameters") {
    CHECK(rounds(Variant::aes128) == 10);
    CHECK(rounds(Variant::aes192) == 12);
    CHECK(rounds(Variant::aes256) == 14);
    CHECK(key_bits(Variant::aes128) == 128);
    CHECK(key_bits(Variant::aes192) == 192);
    CHECK(key_bits(Variant::aes256) == 256);
    CHECK(variant_for_key_size(16) == Variant::aes128);
    CHECK(variant_for_key_size(24) == Variant::aes192);
    CHECK(variant_for_key_size(32) == Variant::aes256);
    CHECK_THROWS_AS(variant_for_key_size(20), std::invalid_argument);
}

TEST_CASE("aes_core: S-box tables") {
    CHECK(sbox_table()[Gf256::zero()] == Gf256(0x63));
    // phi3(L(1)) = 0x1F ^ 0x63
    CHECK(sbox_table()[Gf256::one()] == Gf256(0x7C));
    for (int a = 0; a < 256; ++a) {
        const Gf256 g(static_cast<std::uint8_t>(a));
        CHECK(inv_sbox_table()[sbox_table()[g]] == g);
    }
}

TEST_CASE("aes_core: round constants are the powers of z") {
    const std::uint8_t rcon[10] = {0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36};
    for (unsigned t = 0; t < 10; ++t) CHECK(pow(Gf256::z(), t) == Gf256(rcon[t]));
}

TEST_CASE("aes_core: ring-form key expansion matches the word-based schedule") {
    const auto zero_ks = expand_key_128(RingElement());
    CHECK(zero_ks.keys.size() == 11);
    const Block rk1 = to_block(zero_ks.keys[1]);
    CHECK(rk1[0] == 0x62);
    CHECK(rk1[1] == 0x63);
    CHECK(rk1[2] == 0x63);
    CHECK(rk1[3] == 0x63);

    const auto key = from_hex("000102030405060708090a0b0c0d0e0f");
    const auto ks = expand_key_128(from_block(block_from_hex("000102030405060708090a0b0c0d0e0f")));
    const auto w = refaes::ref_expand_key(key);
    for (int r = 0; r <= 10; ++r) {
        const Block b = to_block(ks.keys[static_cast<std::size_t>(r)]);
        for (int i = 0; i < 16; ++i)
            REQUIRE(b[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(16 * r + i)]);
    }
}

TEST_CASE("aes_core: expand_key agrees with expand_key_128 on random keys") {
    std::mt19937 rng(7501);
    for (int n = 0; n < 100; ++n) {
        const Block kb = random_block(rng);
        const auto a = expand_key(kb, Variant::aes128);
        const auto b = expand_key_128(from_block(kb));
        REQUIRE(a.keys.size() == b.keys.size());
        for (std::size_t i = 0; i < a.keys.size(); ++i) REQUIRE(a.keys[i] == b.keys[i]);
    }
}

TEST_CASE("aes_core: key schedule lift for the larger variants") {
    std::mt19937 rng(7502);
    for (const Variant v : {Variant::aes192, Variant::aes256}) {
        std::vector<std::uint8_t> key(static_cast<std::size_t>(key_bytes(v)));
        for (auto& b : key) b = static_cast<std::uint8_t>(rng());
        const auto ks = expand_key(key, v);
        CHECK(ks.keys.size() == static_cast<std::size_t>(rounds(v)) + 1);
        const auto w = refaes::ref_expand_key(key);
        for (std::size_t r = 0; r < ks.keys.size(); ++r) {
            const Block b = to_block(ks.keys[r]);
            for (std::size_t i = 0; i < 16; ++i) REQUIRE(b[i] == w[16 * r + i]);
        }
    }
    CHECK_THROWS_AS(expand_key(std::vector<std::uint8_t>(24), Variant::aes128),
                    std::invalid_argument);
}

TEST_CASE("aes_core: S-box three-way agreement") {
    // frozen 9-term polynomial, the phi3∘L∘phi1 table, and the reference
    // literal must describe the same permutation
    PermPolynomial phi;
    phi[254] = Gf256(0x05);
    phi[253] = Gf256(0x09);
    phi[251] = Gf256(0xF9);
    phi[247] = Gf256(0x25);
    phi[239] = Gf256(0xF4);
    phi[223] = Gf256(0x01);
    phi[191] = Gf256(0xB5);
    phi[127] = Gf256(0x8F);
    phi[0] = Gf256(0x63);
    const PermutationTable from_poly = tabulate(phi);
    const auto& literal = refaes::ref_sbox();
    for (int a = 0; a < 256; ++a) {
        const Gf256 g(static_cast<std::uint8_t>(a));
        REQUIRE(from_poly[g] == sbox_table()[g]);
        REQUIRE(sbox_table()[g] == Gf256(literal[static_cast<std::size_t>(a)]));
    }
}

TEST_CASE("aes_core: published known-answer vectors") {
    const auto ks = expand_key(from_hex("000102030405060708090a0b0c0d0e0f"));
    const Block pt = block_from_hex("00112233445566778899aabbccddeeff");
    const Block ct = to_block(encrypt(from_block(pt), ks));
    CHECK(block_to_hex(ct) == "69c4e0d86a7b0430d8cdb78070b4c55a");
    CHECK(to_block(decrypt(from_block(ct), ks)) == pt);

    const auto ks192 = expand_key(from_hex("000102030405060708090a0b0c0d0e0f1011121314151617"));
    CHECK(block_to_hex(to_block(encrypt(from_block(pt), ks192))) ==
          "dda97ca4864cdfe06eaf70a0ec0d7191");
    const auto ks256 =
        expand_key(from_hex("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f"));
    CHECK(block_to_hex(to_block(encrypt(from_block(pt), ks256))) ==
          "8ea2b7ca516745bfeafc49904b496089");
    CHECK(to_block(decrypt(from_block(block_from_hex("8ea2b7ca516745bfeafc49904b496089")), ks256)) ==
          pt);
}

TEST_CASE("aes_core: encrypt/decrypt round-trip on random pairs") {
    std::mt19937 rng(7503);
    for (int n = 0; n < 1000; ++n) {
        const Block kb = random_block(rng);
        const auto ks = expand_key(kb, Variant::aes128);
        const Block m = random_block(rng);
        REQUIRE(to_block(decrypt(encrypt(from_block(m), ks), ks)) == m);
    }
}

TEST_CASE("aes_core: differential agreement with the reference cipher") {
    std::mt19937 rng(7504);
    for (const Variant v : {Variant::aes128, Variant::aes192, Variant::aes256}) {
        std::vector<std::uint8_t> key(static_cast<std::size_t>(key_bytes(v)));
        for (int n = 0; n < 200; ++n) {
            for (auto& b : key) b = static_cast<std::uint8_t>(rng());
            const Block m = random_block(rng);
            const auto ks = expand_key(key, v);
            const Block ct = to_block(encrypt(from_block(m), ks));
            REQUIRE(std::equal(ct.begin(), ct.end(), refaes::ref_encrypt(m, key).begin()));
            REQUIRE(to_block(decrypt(from_block(ct), ks)) == m);
            REQUIRE(std::equal(m.begin(), m.end(), refaes::ref_decrypt(ct, key).begin()));
        }
    }
}

TEST_CASE("aes_core: a gamma multiplication in the final round breaks the cipher") {
    const auto ks = expand_key(from_hex("000102030405060708090a0b0c0d0e0f"));
    const Block pt = block_from_hex("00112233445566778899aabbccddeeff");

    RingElement state = from_block(pt) + ks.keys[0];
    for (int t = 0; t + 1 < 10; ++t) state = gamma() * sub_shift(state) + ks.keys[static_cast<std::size_t>(t) + 1];
    const RingElement wrong = gamma() * sub_shift(state) + ks.keys[10];
    const RingElement right = sub_shift(state) + ks.keys[10];

    CHECK(block_to_hex(to_block(right)) == "69c4e0d86a7b0430d8cdb78070b4c55a");
    CHECK_FALSE(block_to_hex(to_block(wrong)) == "69c4e0d86a7b0430d8cdb78070b4c55a");
}

TEST_CASE("aes_core: schedule/variant mismatch is rejected") {
    const auto ks128 = expand_key(std::vector<std::uint8_t>(16));
    RoundKeySchedule bad{Variant::aes192, ks128.keys};  // 11 keys, 12-round variant
    CHECK_THROWS_AS(encrypt(RingElement(), bad), std::invalid_argument);
    CHECK_THROWS_AS(decrypt(RingElement(), bad), std::invalid_argument);
}
