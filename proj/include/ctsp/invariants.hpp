#pragma once

#include <string>
#include <vector>

#include "ctsp/search.hpp"

namespace ctsp {

// Post-hoc verification of a traced run against the branch-count invariants
// and the five recurrence line decrement patterns.
struct PathInvariantReport {
    bool pass = true;
    int max_3a7b = 0;
    int max_a = 0;
    int max_b = 0;
    long rows = 0;
    long checked_children = 0;   // children with a recorded fixpoint
    long leaf_children = 0;      // children resolved before branching again
    long root_rows = 0;          // Step 3(c) rows, exempt from line matching
    std::vector<std::string> violations;
};

// Each recurrence line as per-child (ds, df) requirements; a branch matches
// a line when its children can be assigned to the line's two slots with
// ds >= slot ds and df >= slot df. Children without recorded measures are
// leaves and satisfy any slot.
PathInvariantReport check_path_invariants(const SearchStats& stats,
                                          const std::vector<TraceRow>& rows);

std::vector<TraceRow> load_trace_csv(const std::string& path);

}  // namespace ctsp
