#pragma once

#include <optional>

#include "ctsp/graph.hpp"
#include "ctsp/rewrite_log.hpp"

namespace ctsp {

// Terminal result of Step 2 (and of whole-tour construction): either a tour
// with its cost in input-graph units, or no completion.
struct ClosureResult {
    bool ok = false;
    Cost cost = 0;
    std::set<EdgeId> tour_input_edges;

    static ClosureResult failure() { return {}; }
};

// True iff every connected component of the unforced subgraph is a 4-cycle.
bool is_disjoint_4cycle_cover(const WeightedMultigraph& g);

// Opposite-pair selection plus minimum spanning tree over the component
// graph. Fails when the component graph is disconnected.
ClosureResult solve_4cycle_closure(const WeightedMultigraph& g, const RewriteLog& log,
                                   const WeightedMultigraph& input);

// Test oracle: tries all 2^k opposite-pair combinations, keeps those whose
// union with F is a single Hamiltonian cycle. Refuses above 20 cycles.
ClosureResult brute_force_closure(const WeightedMultigraph& g, const RewriteLog& log,
                                  const WeightedMultigraph& input);

}  // namespace ctsp
