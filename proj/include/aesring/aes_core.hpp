#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "aesring/permpoly.hpp"
#include "aesring/ring.hpp"

namespace aesring {

enum class Variant : std::uint8_t { aes128, aes192, aes256 };

constexpr int rounds(Variant v) {
    switch (v) {
        case Variant::aes128: return 10;
        case Variant::aes192: return 12;
        default: return 14;
    }
}
constexpr int key_bits(Variant v) {
    switch (v) {
        case Variant::aes128: return 128;
        case Variant::aes192: return 192;
        default: return 256;
    }
}
constexpr int key_bytes(Variant v) { return key_bits(v) / 8; }
std::string_view name(Variant v);

/// Variant whose key size is n bytes; throws std::invalid_argument.
Variant variant_for_key_size(std::size_t n);

/// Round keys k^(0)..k^(Nr) as ring elements.
struct RoundKeySchedule {
    Variant variant;
    std::vector<RingElement> keys;
};

/// The S-box permutation phi = phi3 ∘ L ∘ phi1 (inversion with 0 fixed,
/// then the inner linear map, then addition of z^6+z^5+z+1), tabulated.
const PermutationTable& sbox_table();
const PermutationTable& inv_sbox_table();

/// The ring-form key expansion recurrence for AES-128:
/// k^(t+1)_0 = (sum_i phi(k^(t)_{i,3}) x^i) x^3 + z^t + k^(t)_0,
/// k^(t+1)_i = k^(t+1)_{i-1} + k^(t)_i. Produces 11 round keys.
RoundKeySchedule expand_key_128(const RingElement& k);

/// Word-based FIPS-197 expansion packed into ring elements (11/13/15 keys).
/// Agrees with expand_key_128 for 16-byte keys. Throws on length mismatch.
RoundKeySchedule expand_key(std::span<const std::uint8_t> key, Variant v);
RoundKeySchedule expand_key(std::span<const std::uint8_t> key);

/// m^(0) = m + k^(0); m^(t+1) = gamma * SR(phi(m^(t))) + k^(t+1); the final
/// round omits the multiplication by gamma.
RingElement encrypt(const RingElement& m, const RoundKeySchedule& ks);

/// The reversed schedule with psi, the inverse ShiftRow exponent, gamma^-1,
/// and transformed round keys gamma^-1 k^(t) (computed once per call).
RingElement decrypt(const RingElement& c, const RoundKeySchedule& ks);

}  // namespace aesring
