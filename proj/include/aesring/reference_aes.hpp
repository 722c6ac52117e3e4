#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace aesring::refaes {

// Table-driven FIPS-197 implementation used as a differential-testing
// oracle. Deliberately shares no arithmetic with the algebraic modules:
// the S-box is a hardcoded literal and byte multiplication is a local
// xtime chain.

/// The hardcoded S-box literal.
const std::array<std::uint8_t, 256>& ref_sbox();

/// Expanded key schedule, 16*(Nr+1) bytes. Key must be 16, 24 or 32 bytes.
std::vector<std::uint8_t> ref_expand_key(std::span<const std::uint8_t> key);

std::array<std::uint8_t, 16> ref_encrypt(std::span<const std::uint8_t> block,
                                         std::span<const std::uint8_t> key);
std::array<std::uint8_t, 16> ref_decrypt(std::span<const std::uint8_t> block,
                                         std::span<const std::uint8_t> key);

}  // namespace aesring::refaes
