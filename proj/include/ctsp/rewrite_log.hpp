#pragma once

#include <array>
#include <set>
#include <variant>
#include <vector>

#include "ctsp/graph.hpp"

namespace ctsp {

// Reversible record of the rewrites applied to a (G, F) state. Replaying the
// log backwards maps any tour of the current graph onto a tour of the input
// graph with the same total cost in input-graph units.

struct EdgeRemoved {
    EdgeId edge;
};

struct ForcedFlagSet {
    EdgeId edge;
};

// v had exactly two forced edges uv, vw; they were replaced by `merged`
// joining u and w with the summed cost. The third edge at v, if any, is
// logged separately as EdgeRemoved before this record.
struct ForcedPathMerge {
    EdgeId merged;
    EdgeId replaced_a;
    EdgeId replaced_b;
    VertexId removed_vertex;
};

// Triangle xyz contracted into super_vertex. external[i] is the surviving
// non-triangle edge that was attached to triangle_vertices[i]; its cost was
// increased by the cost of the opposite triangle edge opposite_edge[i].
struct TriangleContraction {
    VertexId super_vertex;
    std::array<VertexId, 3> triangle_vertices;
    std::array<EdgeId, 3> external; // external[i] incident to triangle_vertices[i]
    std::array<EdgeId, 3> opposite_edge; // opposite_edge[i] joins the other two vertices
    std::array<Cost, 3> opposite_cost;
};

using RewriteRecord = std::variant<EdgeRemoved, ForcedFlagSet, ForcedPathMerge, TriangleContraction>;

class RewriteLog {
public:
    void push(RewriteRecord r) { records_.push_back(std::move(r)); }
    const std::vector<RewriteRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    // Maps a tour (edge set in which every contracted super-vertex has
    // degree exactly 2 and every merged edge is present) of the current
    // graph back to an edge set of the input graph.
    std::set<EdgeId> expand(const std::set<EdgeId>& current) const;

private:
    std::vector<RewriteRecord> records_;
};

// Total input-graph cost of an input-graph edge set.
Cost cost_of(const WeightedMultigraph& input, const std::set<EdgeId>& edges);

// True iff `edges` is a Hamiltonian cycle of `input`.
bool is_hamiltonian_cycle(const WeightedMultigraph& input, const std::set<EdgeId>& edges);

}  // namespace ctsp
