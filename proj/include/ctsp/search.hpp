#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsp/closure.hpp"
#include "ctsp/rng.hpp"
#include "ctsp/graph.hpp"
#include "ctsp/reduce.hpp"

namespace ctsp {

enum class BranchKind : char { A = 'A', B = 'B', D = 'D' };

// which step chose the branch edge
enum class Provenance : std::uint8_t { Step3a, Step3aPrime, Step3b, Step3c };
const char* provenance_name(Provenance p);  // "3a", "3a'", "3b", "3c"

struct Outcome {
    bool has_tour = false;
    Cost cost = 0;
    std::vector<EdgeId> tour_edges;  // input-graph edge ids

    static Outcome no_tour() { return {}; }
};

struct SearchStats {
    int n = 0;  // input vertex count
    long leaves = 0;
    long branches = 0;
    long a_branches = 0;
    long b_branches = 0;
    long d_branches = 0;
    int max_depth = 0;
    int max_3a7b = 0;  // max over leaves of 3a + 7b
    int max_a = 0;
    int max_b = 0;
    long solved_leaves = 0;   // resolved inside Step 1
    long pruned_leaves = 0;
    long closure_leaves = 0;  // resolved by Step 2
    long contraction_parallel_events = 0;
};

// One row per branch. Child measures are taken at the child's own Step-1
// fixpoint; children resolved during simplification carry -1/-1.
struct TraceRow {
    int depth;
    Provenance provenance;
    BranchKind kind;
    EdgeId edge;
    int s_before, f_before;
    int s_child1, f_child1;
    int s_child2, f_child2;
    int a, b, d;  // path counts including this branch
};

class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void row(const TraceRow& r) = 0;
};

class VectorTraceSink : public TraceSink {
public:
    void row(const TraceRow& r) override { rows.push_back(r); }
    std::vector<TraceRow> rows;
};

class CsvTraceSink : public TraceSink {
public:
    explicit CsvTraceSink(const std::string& path);
    ~CsvTraceSink() override;
    void row(const TraceRow& r) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::string trace_csv_header();
std::string trace_csv_line(const TraceRow& r);

struct SolveConfig {
    std::uint64_t seed = 0;
    bool deterministic = false;   // Step 3(c): smallest edge id instead of seeded choice
    bool check_invariants = true; // assert 3a+7b <= n etc. at every leaf
    bool prune = false;           // best-so-far pruning; never used in invariant runs
    std::vector<EdgeId> script;   // scripted edge choices, consumed before policy
    TraceSink* trace = nullptr;
    RuleTap rule_tap;             // test hook passed through to simplify
};

// Thrown when a run violates the path invariants; indicates an
// implementation bug, never bad input.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Step 3 edge selection at a simplify fixpoint that is not a 4-cycle cover.
std::pair<EdgeId, Provenance> choose_branch_edge(const WeightedMultigraph& g,
                                                 const SolveConfig& cfg, Rng* rng);

BranchKind classify_branch(const WeightedMultigraph& g, EdgeId edge, Provenance prov);

// Exact minimum-cost Hamiltonian tour of a connected cubic multigraph.
std::pair<Outcome, SearchStats> solve(const WeightedMultigraph& g, const SolveConfig& cfg = {});

}  // namespace ctsp
