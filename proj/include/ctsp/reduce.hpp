#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ctsp/graph.hpp"
#include "ctsp/rewrite_log.hpp"

namespace ctsp {

// Shared id source for one solve; fresh ids from contractions and merges are
// unique across the whole search tree.
struct IdAllocator {
    VertexId next_vertex = 0;
    EdgeId next_edge = 0;

    static IdAllocator for_graph(const WeightedMultigraph& g) {
        return IdAllocator{g.next_vertex_id(), g.next_edge_id()};
    }
    VertexId vertex() { return next_vertex++; }
    EdgeId edge() { return next_edge++; }
};

struct AppliedRule {
    char rule;               // 'a'..'j'
    std::string note;        // parameters, for audit traces
};

struct SimplifyOutcome {
    enum class Tag { Pruned, Solved, InProgress };
    Tag tag = Tag::InProgress;
    Cost cost = 0;                      // input-graph units (Solved only)
    std::set<EdgeId> tour_input_edges;  // expanded tour (Solved only)
    std::vector<AppliedRule> applied;

    bool pruned() const { return tag == Tag::Pruned; }
    bool solved() const { return tag == Tag::Solved; }
    bool in_progress() const { return tag == Tag::InProgress; }
};

// Test hook: observes each rule application with the states immediately
// before and after.
using RuleTap = std::function<void(char rule, const WeightedMultigraph& before,
                                   const RewriteLog& log_before, const WeightedMultigraph& after,
                                   const RewriteLog& log_after)>;

// Step 1 fixpoint: applies rules (a)..(j) in listed priority, restarting
// from (a) after every rewrite, until a rule returns or none applies.
// `input` is the original graph used to expand Solved costs.
SimplifyOutcome simplify(WeightedMultigraph& g, RewriteLog& log, IdAllocator& ids,
                         const WeightedMultigraph& input, const RuleTap& tap = nullptr);

// Individual rewrites, exposed for unit tests. Preconditions as in the
// rules that invoke them.
void contract_triangle(WeightedMultigraph& g, RewriteLog& log, IdAllocator& ids, VertexId x,
                       VertexId y, VertexId z, bool* made_parallel = nullptr);
void merge_forced_path(WeightedMultigraph& g, RewriteLog& log, IdAllocator& ids, VertexId v);
void apply_4cycle_forcing(WeightedMultigraph& g, RewriteLog& log, const CycleDescriptor& cycle);

}  // namespace ctsp
