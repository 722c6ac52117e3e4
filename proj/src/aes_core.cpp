#include "aesring/aes_core.hpp"

#include <stdexcept>

#include "aesring/linearized.hpp"

namespace aesring {

std::string_view name(Variant v) {
    switch (v) {
        case Variant::aes128: return "AES-128";
        case Variant::aes192: return "AES-192";
        default: return "AES-256";
    }
}

Variant variant_for_key_size(std::size_t n) {
    switch (n) {
        case 16: return Variant::aes128;
        case 24: return Variant::aes192;
        case 32: return Variant::aes256;
        default: throw std::invalid_argument("aes: key must be 16, 24 or 32 bytes");
    }
}

const PermutationTable& sbox_table() {
    static const PermutationTable table = [] {
        FuncTable t;
        for (int a = 0; a < 256; ++a) {
            const Gf256 g(static_cast<std::uint8_t>(a));
            const Gf256 phi1 = g.is_zero() ? Gf256::zero() : inv(g);
            t[static_cast<std::size_t>(a)] = l_map(phi1) + Gf256(0x63);
        }
        return PermutationTable(t);
    }();
    return table;
}

const PermutationTable& inv_sbox_table() {
    static const PermutationTable table = [] {
        FuncTable t;
        const PermutationTable& s = sbox_table();
        for (int a = 0; a < 256; ++a)
            t[s[Gf256(static_cast<std::uint8_t>(a))].bits()] = Gf256(static_cast<std::uint8_t>(a));
        return PermutationTable(t);
    }();
    return table;
}

namespace {

void check_schedule(const RoundKeySchedule& ks) {
    if (ks.keys.size() != static_cast<std::size_t>(rounds(ks.variant)) + 1)
        throw std::invalid_argument("aes: schedule length does not match the variant");
}

RingElement apply_table(const RingElement& r, const PermutationTable& t) {
    RingElement out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, j) = t[r.at(i, j)];
    return out;
}

}  // namespace

RoundKeySchedule expand_key_128(const RingElement& k) {
    const PermutationTable& phi = sbox_table();
    RoundKeySchedule ks{Variant::aes128, {}};
    ks.keys.reserve(11);
    ks.keys.push_back(k);

    Gf256 rc = Gf256::one();  // z^t
    for (int t = 0; t < 10; ++t) {
        const RingElement& prev = ks.keys.back();
        RingElement next;
        // column 0: (sum_i phi(k_{i,3}) x^i) * x^3 shifts x^i to x^(i+3),
        // so coefficient i of the product is phi(k_{(i+1) mod 4, 3})
        for (int i = 0; i < 4; ++i) next.at(i, 0) = phi[prev.at((i + 1) & 3, 3)] + prev.at(i, 0);
        next.at(0, 0) += rc;  // z^t is a pure z-polynomial: the x^0 coefficient
        rc *= Gf256::z();
        for (int j = 1; j < 4; ++j)
            for (int i = 0; i < 4; ++i) next.at(i, j) = next.at(i, j - 1) + prev.at(i, j);
        ks.keys.push_back(next);
    }
    return ks;
}

RoundKeySchedule expand_key(std::span<const std::uint8_t> key, Variant v) {
    if (key.size() != static_cast<std::size_t>(key_bytes(v)))
        throw std::invalid_argument("aes: key length does not match the variant");
    const PermutationTable& phi = sbox_table();
    const int nk = key_bytes(v) / 4;
    const int nr = rounds(v);

    std::vector<std::uint8_t> w(static_cast<std::size_t>(16 * (nr + 1)));
    std::copy(key.begin(), key.end(), w.begin());
    Gf256 rcon = Gf256::one();
    const auto sub = [&phi](std::uint8_t b) { return phi[Gf256(b)].bits(); };
    for (int i = nk; i < 4 * (nr + 1); ++i) {
        std::uint8_t t[4];
        for (int b = 0; b < 4; ++b) t[b] = w[static_cast<std::size_t>(4 * (i - 1) + b)];
        if (i % nk == 0) {
            const std::uint8_t t0 = t[0];
            t[0] = static_cast<std::uint8_t>(sub(t[1]) ^ rcon.bits());
            t[1] = sub(t[2]);
            t[2] = sub(t[3]);
            t[3] = sub(t0);
            rcon *= Gf256::z();
        } else if (nk == 8 && i % nk == 4) {
            for (int b = 0; b < 4; ++b) t[b] = sub(t[b]);
        }
        for (int b = 0; b < 4; ++b)
            w[static_cast<std::size_t>(4 * i + b)] =
                static_cast<std::uint8_t>(w[static_cast<std::size_t>(4 * (i - nk) + b)] ^ t[b]);
    }

    RoundKeySchedule ks{v, {}};
    ks.keys.reserve(static_cast<std::size_t>(nr) + 1);
    for (int r = 0; r <= nr; ++r) {
        Block b;
        std::copy_n(w.begin() + 16 * r, 16, b.begin());
        ks.keys.push_back(from_block(b));
    }
    return ks;
}

RoundKeySchedule expand_key(std::span<const std::uint8_t> key) {
    return expand_key(key, variant_for_key_size(key.size()));
}

RingElement encrypt(const RingElement& m, const RoundKeySchedule& ks) {
    check_schedule(ks);
    const PermutationTable& phi = sbox_table();
    const RingElement g = gamma();
    const int nr = rounds(ks.variant);

    RingElement state = m + ks.keys[0];
    for (int t = 0; t + 1 < nr; ++t)
        state = g * shift_rows(apply_table(state, phi)) + ks.keys[static_cast<std::size_t>(t) + 1];
    return shift_rows(apply_table(state, phi)) + ks.keys[static_cast<std::size_t>(nr)];
}

RingElement decrypt(const RingElement& c, const RoundKeySchedule& ks) {
    check_schedule(ks);
    const PermutationTable& psi = inv_sbox_table();
    const RingElement gi = gamma_inv();
    const int nr = rounds(ks.variant);

    // transformed schedule k^(Nr), gamma^-1 k^(Nr-1), ..., gamma^-1 k^(1), k^(0)
    std::vector<RingElement> tk(static_cast<std::size_t>(nr) + 1);
    tk[0] = ks.keys[static_cast<std::size_t>(nr)];
    for (int t = 1; t < nr; ++t) tk[static_cast<std::size_t>(t)] = gi * ks.keys[static_cast<std::size_t>(nr - t)];
    tk[static_cast<std::size_t>(nr)] = ks.keys[0];

    RingElement state = c + tk[0];
    for (int t = 0; t + 1 < nr; ++t)
        state = gi * inv_shift_rows(apply_table(state, psi)) + tk[static_cast<std::size_t>(t) + 1];
    return inv_shift_rows(apply_table(state, psi)) + tk[static_cast<std::size_t>(nr)];
}

}  // namespace aesring
