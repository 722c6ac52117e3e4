#include "aesring/sbox_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aesring {

CycleDecomposition cycle_decomposition(const PermutationTable& t) {
    std::array<bool, 256> seen{};
    CycleDecomposition d;
    for (int start = 0; start < 256; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<Gf256> cycle;
        Gf256 a(static_cast<std::uint8_t>(start));
        while (!seen[a.bits()]) {
            seen[a.bits()] = true;
            cycle.push_back(a);
            a = t[a];
        }
        // starting points ascend, so each new cycle already opens at its
        // smallest byte and the cycle list is sorted by it
        d.cycles.push_back(std::move(cycle));
    }
    return d;
}

PermutationTable to_table(const CycleDecomposition& d) {
    FuncTable t;
    for (const auto& cycle : d.cycles)
        for (std::size_t p = 0; p < cycle.size(); ++p)
            t[cycle[p].bits()] = cycle[(p + 1) % cycle.size()];
    return PermutationTable(t);
}

std::uint64_t permutation_order(const CycleDecomposition& d) {
    std::uint64_t l = 1;
    for (const auto& cycle : d.cycles) l = std::lcm(l, static_cast<std::uint64_t>(cycle.size()));
    return l;
}

DiscreteLogTable discrete_logs(Gf256 generator) {
    if (!is_primitive(generator))
        throw std::invalid_argument("discrete logs: " + to_hex(generator) + " is not primitive");
    DiscreteLogTable t{generator, {}};
    t.log.fill(-1);
    Gf256 p = Gf256::one();
    for (int e = 0; e < 255; ++e) {
        t.log[p.bits()] = e;
        p *= generator;
    }
    return t;
}

std::string format_cycles(const CycleDecomposition& d, CycleFormat fmt, bool start_at_generator,
                          Gf256 generator) {
    const DiscreteLogTable logs =
        fmt == CycleFormat::alpha_power ? discrete_logs(generator) : DiscreteLogTable{};
    std::string out;
    for (const auto& cycle : d.cycles) {
        std::size_t first = 0;
        if (start_at_generator) {
            const auto it = std::find(cycle.begin(), cycle.end(), generator);
            if (it != cycle.end()) first = static_cast<std::size_t>(it - cycle.begin());
        }
        out += '[';
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const Gf256 a = cycle[(first + k) % cycle.size()];
            if (k != 0) out += ", ";
            if (fmt == CycleFormat::hex) {
                out += to_hex(a);
            } else if (a.is_zero()) {
                out += '0';
            } else {
                const int e = logs.log[a.bits()];
                out += (e == 1) ? "a" : "a^" + std::to_string(e);
            }
        }
        out += "]\n";
    }
    return out;
}

std::uint64_t landau_max_order(int n) {
    if (n < 1 || n > 256) throw std::invalid_argument("landau: n must be in 1..256");
    // f[j] = max lcm over partitions of <= j into prime powers of distinct
    // primes (padding with 1s is free). Every intermediate is <= g(256),
    // which fits comfortably in 64 bits.
    std::vector<std::uint64_t> f(static_cast<std::size_t>(n) + 1, 1);
    for (int p = 2; p <= n; ++p) {
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        for (int j = n; j >= p; --j) {
            std::uint64_t best = f[static_cast<std::size_t>(j)];
            for (int pk = p; pk <= j; pk *= p)
                best = std::max(best, static_cast<std::uint64_t>(pk) * f[static_cast<std::size_t>(j - pk)]);
            f[static_cast<std::size_t>(j)] = best;
        }
    }
    return f[static_cast<std::size_t>(n)];
}

}  // namespace aesring
