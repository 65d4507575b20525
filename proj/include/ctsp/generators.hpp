#pragma once

#include <cstdint>

#include "ctsp/graph.hpp"
#include "ctsp/rng.hpp"

namespace ctsp {

struct CostPolicy {
    enum class Kind { Unit, UniformRange } kind = Kind::Unit;
    Cost lo = 1, hi = 1;
    std::uint64_t seed = 0;

    static CostPolicy unit() { return {}; }
    static CostPolicy uniform(Cost lo, Cost hi, std::uint64_t seed) {
        return {Kind::UniformRange, lo, hi, seed};
    }
};

void assign_costs(WeightedMultigraph& g, const CostPolicy& policy);

// Simple connected 3-regular graph on n vertices via the pairing
// (configuration) model with rejection of loops, multi-edges and
// disconnected outcomes. Byte-identical per (n, seed).
WeightedMultigraph random_cubic(int n, std::uint64_t seed,
                                const CostPolicy& costs = CostPolicy::unit());

// The (3,g)-cage from the embedded catalog, unit costs; orders
// 4, 6, 10, 14, 24, 30, 58, 70, 112 for g = 3..11. Girth is re-verified on
// every call.
WeightedMultigraph cage(int girth);

// Cubic graph on n vertices (n = 0 mod 6) with exactly 2^{n/3} Hamiltonian
// cycles: a necklace of K_{3,3}-minus-an-edge gadgets (4 port-to-port
// Hamiltonian paths each). The n = 6 member cannot be simple (no 6-vertex
// simple cubic graph has 4 Hamiltonian cycles) and uses a multigraph.
WeightedMultigraph hc_rich_family(int n, const CostPolicy& costs = CostPolicy::unit());

}  // namespace ctsp
