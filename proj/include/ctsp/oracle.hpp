#pragma once

#include <cstdint>
#include <optional>

#include "ctsp/graph.hpp"

namespace ctsp {

struct OracleResult {
    bool has_tour = false;
    Cost cost = 0;
    std::optional<std::uint64_t> cycle_count;
};

// Exact minimum tour cost via subset dynamic programming. Accepts any
// weighted graph; parallel edges collapse to the cheapest, self-loops are
// ignored (n >= 2). Refuses n > 20.
OracleResult held_karp(const WeightedMultigraph& g);

// Number of distinct Hamiltonian cycles, counted as edge sets (rotations and
// the two directions identified). Parallel edges yield distinct cycles.
// Refuses n > 24.
std::uint64_t count_hamiltonian_cycles(const WeightedMultigraph& g);

}  // namespace ctsp
