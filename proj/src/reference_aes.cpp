#include "aesring/reference_aes.hpp"

#include <stdexcept>

namespace aesring::refaes {

namespace {

constexpr std::array<std::uint8_t, 256> kSbox = {
    0x63, 0x7C, 0x77, 0x7B, 0xF2, 0x6B, 0x6F, 0xC5, 0x30, 0x01, 0x67, 0x2B, 0xFE, 0xD7, 0xAB, 0x76,
    0xCA, 0x82, 0xC9, 0x7D, 0xFA, 0x59, 0x47, 0xF0, 0xAD, 0xD4, 0xA2, 0xAF, 0x9C, 0xA4, 0x72, 0xC0,
    0xB7, 0xFD, 0x93, 0x26, 0x36, 0x3F, 0xF7, 0xCC, 0x34, 0xA5, 0xE5, 0xF1, 0x71, 0xD8, 0x31, 0x15,
    0x04, 0xC7, 0x23, 0xC3, 0x18, 0x96, 0x05, 0x9A, 0x07, 0x12, 0x80, 0xE2, 0xEB, 0x27, 0xB2, 0x75,
    0x09, 0x83, 0x2C, 0x1A, 0x1B, 0x6E, 0x5A, 0xA0, 0x52, 0x3B, 0xD6, 0xB3, 0x29, 0xE3, 0x2F, 0x84,
    0x53, 0xD1, 0x00, 0xED, 0x20, 0xFC, 0xB1, 0x5B, 0x6A, 0xCB, 0xBE, 0x39, 0x4A, 0x4C, 0x58, 0xCF,
    0xD0, 0xEF, 0xAA, 0xFB, 0x43, 0x4D, 0x33, 0x85, 0x45, 0xF9, 0x02, 0x7F, 0x50, 0x3C, 0x9F, 0xA8,
    0x51, 0xA3, 0x40, 0x8F, 0x92, 0x9D, 0x38, 0xF5, 0xBC, 0xB6, 0xDA, 0x21, 0x10, 0xFF, 0xF3, 0xD2,
    0xCD, 0x0C, 0x13, 0xEC, 0x5F, 0x97, 0x44, 0x17, 0xC4, 0xA7, 0x7E, 0x3D, 0x64, 0x5D, 0x19, 0x73,
    0x60, 0x81, 0x4F, 0xDC, 0x22, 0x2A, 0x90, 0x88, 0x46, 0xEE, 0xB8, 0x14, 0xDE, 0x5E, 0x0B, 0xDB,
    0xE0, 0x32, 0x3A, 0x0A, 0x49, 0x06, 0x24, 0x5C, 0xC2, 0xD3, 0xAC, 0x62, 0x91, 0x95, 0xE4, 0x79,
    0xE7, 0xC8, 0x37, 0x6D, 0x8D, 0xD5, 0x4E, 0xA9, 0x6C, 0x56, 0xF4, 0xEA, 0x65, 0x7A, 0xAE, 0x08,
    0xBA, 0x78, 0x25, 0x2E, 0x1C, 0xA6, 0xB4, 0xC6, 0xE8, 0xDD, 0x74, 0x1F, 0x4B, 0xBD, 0x8B, 0x8A,
    0x70, 0x3E, 0xB5, 0x66, 0x48, 0x03, 0xF6, 0x0E, 0x61, 0x35, 0x57, 0xB9, 0x86, 0xC1, 0x1D, 0x9E,
    0xE1, 0xF8, 0x98, 0x11, 0x69, 0xD9, 0x8E, 0x94, 0x9B, 0x1E, 0x87, 0xE9, 0xCE, 0x55, 0x28, 0xDF,
    0x8C, 0xA1, 0x89, 0x0D, 0xBF, 0xE6, 0x42, 0x68, 0x41, 0x99, 0x2D, 0x0F, 0xB0, 0x54, 0xBB, 0x16,
};

constexpr std::array<std::uint8_t, 256> make_inv_sbox() {
    std::array<std::uint8_t, 256> inv{};
    for (int i = 0; i < 256; ++i) inv[kSbox[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return inv;
}
constexpr std::array<std::uint8_t, 256> kInvSbox = make_inv_sbox();

constexpr std::uint8_t xtime(std::uint8_t a) {
    return static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1B : 0x00));
}

// local byte multiplication (xtime chain), independent of the gf256 module
constexpr std::uint8_t bmul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a = xtime(a);
        b >>= 1;
    }
    return r;
}

struct Params {
    int nk;
    int nr;
};

Params params_for(std::size_t key_len) {
    switch (key_len) {
        case 16: return {4, 10};
        case 24: return {6, 12};
        case 32: return {8, 14};
        default: throw std::invalid_argument("reference aes: key must be 16, 24 or 32 bytes");
    }
}

using State = std::array<std::uint8_t, 16>;  // state[r + 4c]

void add_round_key(State& s, const std::uint8_t* rk) {
    for (int i = 0; i < 16; ++i) s[static_cast<std::size_t>(i)] ^= rk[i];
}

void sub_bytes(State& s) {
    for (auto& b : s) b = kSbox[b];
}

void inv_sub_bytes(State& s) {
    for (auto& b : s) b = kInvSbox[b];
}

void shift_rows(State& s) {
    State t = s;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            s[static_cast<std::size_t>(r + 4 * c)] = t[static_cast<std::size_t>(r + 4 * ((c + r) % 4))];
}

void inv_shift_rows(State& s) {
    State t = s;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            s[static_cast<std::size_t>(r + 4 * ((c + r) % 4))] = t[static_cast<std::size_t>(r + 4 * c)];
}

void mix_columns(State& s) {
    for (int c = 0; c < 4; ++c) {
        std::uint8_t* col = &s[static_cast<std::size_t>(4 * c)];
        const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
        col[0] = static_cast<std::uint8_t>(bmul(a0, 2) ^ bmul(a1, 3) ^ a2 ^ a3);
        col[1] = static_cast<std::uint8_t>(a0 ^ bmul(a1, 2) ^ bmul(a2, 3) ^ a3);
        col[2] = static_cast<std::uint8_t>(a0 ^ a1 ^ bmul(a2, 2) ^ bmul(a3, 3));
        col[3] = static_cast<std::uint8_t>(bmul(a0, 3) ^ a1 ^ a2 ^ bmul(a3, 2));
    }
}

void inv_mix_columns(State& s) {
    for (int c = 0; c < 4; ++c) {
        std::uint8_t* col = &s[static_cast<std::size_t>(4 * c)];
        const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
        col[0] = static_cast<std::uint8_t>(bmul(a0, 0x0E) ^ bmul(a1, 0x0B) ^ bmul(a2, 0x0D) ^ bmul(a3, 0x09));
        col[1] = static_cast<std::uint8_t>(bmul(a0, 0x09) ^ bmul(a1, 0x0E) ^ bmul(a2, 0x0B) ^ bmul(a3, 0x0D));
        col[2] = static_cast<std::uint8_t>(bmul(a0, 0x0D) ^ bmul(a1, 0x09) ^ bmul(a2, 0x0E) ^ bmul(a3, 0x0B));
        col[3] = static_cast<std::uint8_t>(bmul(a0, 0x0B) ^ bmul(a1, 0x0D) ^ bmul(a2, 0x09) ^ bmul(a3, 0x0E));
    }
}

}  // namespace

const std::array<std::uint8_t, 256>& ref_sbox() { return kSbox; }

std::vector<std::uint8_t> ref_expand_key(std::span<const std::uint8_t> key) {
    const auto [nk, nr] = params_for(key.size());
    std::vector<std::uint8_t> w(static_cast<std::size_t>(16 * (nr + 1)));
    std::copy(key.begin(), key.end(), w.begin());
    std::uint8_t rcon = 0x01;
    for (int i = nk; i < 4 * (nr + 1); ++i) {
        std::uint8_t t[4];
        for (int b = 0; b < 4; ++b) t[b] = w[static_cast<std::size_t>(4 * (i - 1) + b)];
        if (i % nk == 0) {
            const std::uint8_t t0 = t[0];
            t[0] = static_cast<std::uint8_t>(kSbox[t[1]] ^ rcon);
            t[1] = kSbox[t[2]];
            t[2] = kSbox[t[3]];
            t[3] = kSbox[t0];
            rcon = xtime(rcon);
        } else if (nk == 8 && i % nk == 4) {
            for (int b = 0; b < 4; ++b) t[b] = kSbox[t[b]];
        }
        for (int b = 0; b < 4; ++b)
            w[static_cast<std::size_t>(4 * i + b)] =
                static_cast<std::uint8_t>(w[static_cast<std::size_t>(4 * (i - nk) + b)] ^ t[b]);
    }
    return w;
}

std::array<std::uint8_t, 16> ref_encrypt(std::span<const std::uint8_t> block,
                                         std::span<const std::uint8_t> key) {
    if (block.size() != 16) throw std::invalid_argument("reference aes: block must be 16 bytes");
    const auto [nk, nr] = params_for(key.size());
    const auto w = ref_expand_key(key);

    State s;
    std::copy(block.begin(), block.end(), s.begin());
    add_round_key(s, &w[0]);
    for (int round = 1; round < nr; ++round) {
        sub_bytes(s);
        shift_rows(s);
        mix_columns(s);
        add_round_key(s, &w[static_cast<std::size_t>(16 * round)]);
    }
    sub_bytes(s);
    shift_rows(s);
    add_round_key(s, &w[static_cast<std::size_t>(16 * nr)]);
    return s;
}

std::array<std::uint8_t, 16> ref_decrypt(std::span<const std::uint8_t> block,
                                         std::span<const std::uint8_t> key) {
    if (block.size() != 16) throw std::invalid_argument("reference aes: block must be 16 bytes");
    const auto [nk, nr] = params_for(key.size());
    const auto w = ref_expand_key(key);

    State s;
    std::copy(block.begin(), block.end(), s.begin());
    add_round_key(s, &w[static_cast<std::size_t>(16 * nr)]);
    for (int round = nr - 1; round >= 1; --round) {
        inv_shift_rows(s);
        inv_sub_bytes(s);
        add_round_key(s, &w[static_cast<std::size_t>(16 * round)]);
        inv_mix_columns(s);
    }
    inv_shift_rows(s);
    inv_sub_bytes(s);
    add_round_key(s, &w[0]);
    return s;
}

}  // namespace aesring::refaes
