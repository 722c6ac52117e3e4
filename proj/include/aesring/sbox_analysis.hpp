#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aesring/gf256.hpp"
#include "aesring/permpoly.hpp"

namespace aesring {

/// Disjoint cycle cover of a permutation of F. Canonical form: each cycle is
/// rotated to start at its smallest byte, and cycles are sorted by that byte.
struct CycleDecomposition {
    std::vector<std::vector<Gf256>> cycles;
};

CycleDecomposition cycle_decomposition(const PermutationTable& t);

/// Rebuilds the source permutation from its cycle cover.
PermutationTable to_table(const CycleDecomposition& d);

/// lcm of the cycle lengths.
std::uint64_t permutation_order(const CycleDecomposition& d);

/// Exponent table for a primitive generator: generator^log[a] = a for all
/// nonzero a; log[0] = -1.
struct DiscreteLogTable {
    Gf256 generator;
    std::array<int, 256> log;
};

/// Built by 255 successive multiplications; throws if the generator is not
/// primitive. Defaults to alpha = z^5+1, the generator the cycle listings
/// are written in.
DiscreteLogTable discrete_logs(Gf256 generator = Gf256(0x21));

enum class CycleFormat { alpha_power, hex };

/// One bracketed cycle per line. alpha_power renders nonzero elements as
/// powers of the generator ("a", "a^113", ...) and 0 as "0"; with
/// start_at_generator the cycle containing the generator is rotated to open
/// with it, matching the published listing.
std::string format_cycles(const CycleDecomposition& d, CycleFormat fmt,
                          bool start_at_generator = true,
                          Gf256 generator = Gf256(0x21));

/// Landau's function g(n): the maximal order of an element of the symmetric
/// group on n symbols, i.e. the maximum lcm over all partitions of n.
/// Computed by dynamic programming over prime powers; exact (fits u64 for
/// n <= 256). Requires 1 <= n <= 256.
std::uint64_t landau_max_order(int n);

}  // namespace aesring
