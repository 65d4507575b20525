#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctsp/types.hpp"

namespace ctsp {

struct Edge {
    EdgeId id = kNoEdge;
    VertexId u = kNoVertex;
    VertexId v = kNoVertex;
    Cost cost = 0;
    bool forced = false;
    bool alive = true;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return u == w || v == w; }
};

// Mutable cubic multigraph with stable ids. Ids are never reused; removal
// marks entries dead so RewriteLog references stay unambiguous. Iteration
// helpers return ids in increasing order, which keeps every downstream
// scan deterministic.
class WeightedMultigraph {
public:
    WeightedMultigraph() = default;

    VertexId add_vertex();
    VertexId add_vertex_with_id(VertexId id);
    EdgeId add_edge(VertexId u, VertexId v, Cost cost, bool forced = false);
    EdgeId add_edge_with_id(EdgeId id, VertexId u, VertexId v, Cost cost, bool forced = false);

    const Edge& edge(EdgeId id) const;
    bool vertex_alive(VertexId id) const;
    bool edge_alive(EdgeId id) const;

    void remove_edge(EdgeId id);
    void remove_vertex(VertexId id);  // requires no alive incident edges
    void set_forced(EdgeId id);
    void set_cost(EdgeId id, Cost c);
    // endpoint rewrite used by triangle contraction
    void move_endpoint(EdgeId id, VertexId from, VertexId to);

    int num_vertices() const { return alive_vertices_; }
    int num_edges() const { return alive_edges_; }
    int num_forced() const { return forced_edges_; }

    int degree(VertexId v) const;         // self-loops count twice
    int unforced_degree(VertexId v) const;
    int forced_degree(VertexId v) const;  // forced self-loops count twice

    std::vector<VertexId> vertex_ids() const;
    std::vector<EdgeId> edge_ids() const;
    std::vector<EdgeId> forced_edge_ids() const;
    std::vector<EdgeId> incident(VertexId v) const;  // alive incident edges, ascending

    VertexId next_vertex_id() const { return next_vertex_; }
    EdgeId next_edge_id() const { return next_edge_; }

    Cost total_cost() const;

private:
    Edge& edge_mut(EdgeId id);
    struct VertexRec {
        VertexId id;
        bool alive = true;
        std::vector<EdgeId> inc;
    };
    VertexRec& vertex_mut(VertexId id);
    const VertexRec& vertex_rec(VertexId id) const;

    std::vector<Edge> edges_;        // ascending by id
    std::vector<VertexRec> verts_;   // ascending by id
    VertexId next_vertex_ = 0;
    EdgeId next_edge_ = 0;
    int alive_vertices_ = 0;
    int alive_edges_ = 0;
    int forced_edges_ = 0;
};

struct CycleDescriptor {
    std::vector<VertexId> vertices;  // cyclic order, vertices[i] -- vertices[i+1]
    std::vector<EdgeId> edges;       // edges[i] joins vertices[i], vertices[(i+1)%len]
    int length = 0;
    int attached_selected_count = 0;  // forced non-cycle edges incident to the cycle

    std::vector<EdgeId> key() const;  // sorted edge ids; canonical identity
};

// Shortest cycle length; nullopt for forests. Self-loops give 1, parallel
// pairs give 2.
std::optional<int> girth(const WeightedMultigraph& g);

// All simple cycles of the given length (4 or 6). With live_only, only
// cycles none of whose edges is forced. Deterministic order: lexicographic
// by sorted edge-id tuple.
std::vector<CycleDescriptor> find_unforced_cycles(const WeightedMultigraph& g, int length,
                                                  bool live_only = true);

struct Measures {
    int s = 0;        // |V| - |F| - 2 * (# isolated 4-cycle components of G\F)
    int f = 0;        // free vertices: no forced incident edge
    int cycles4 = 0;  // isolated 4-cycle component count
};
Measures measures(const WeightedMultigraph& g);

// Edges of the isolated 4-cycles counted by Measures::cycles4; these are
// settled by the closure step and never branched on.
std::set<EdgeId> isolated_4cycle_edges(const WeightedMultigraph& g);

bool is_connected(const WeightedMultigraph& g);
bool is_cubic(const WeightedMultigraph& g);
bool is_simple(const WeightedMultigraph& g);
bool has_triangle(const WeightedMultigraph& g);

}  // namespace ctsp
