#include "ctsp/graph.hpp"

#include <algorithm>
#include <functional>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace ctsp {

namespace {

template <typename Vec, typename Id>
auto find_by_id(Vec& v, Id id) -> decltype(&v[0]) {
    auto it = std::lower_bound(v.begin(), v.end(), id,
                               [](const auto& rec, Id key) { return rec.id < key; });
    if (it == v.end() || it->id != id) return nullptr;
    return &*it;
}

}  // namespace

VertexId WeightedMultigraph::add_vertex() { return add_vertex_with_id(next_vertex_); }

VertexId WeightedMultigraph::add_vertex_with_id(VertexId id) {
    assert(verts_.empty() || verts_.back().id < id);
    verts_.push_back(VertexRec{id, true, {}});
    next_vertex_ = id + 1;
    alive_vertices_++;
    return id;
}

EdgeId WeightedMultigraph::add_edge(VertexId u, VertexId v, Cost cost, bool forced) {
    return add_edge_with_id(next_edge_, u, v, cost, forced);
}

EdgeId WeightedMultigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v, Cost cost,
                                            bool forced) {
    assert(edges_.empty() || edges_.back().id < id);
    edges_.push_back(Edge{id, u, v, cost, forced, true});
    next_edge_ = id + 1;
    vertex_mut(u).inc.push_back(id);
    if (v != u) vertex_mut(v).inc.push_back(id);
    alive_edges_++;
    if (forced) forced_edges_++;
    return id;
}

const Edge& WeightedMultigraph::edge(EdgeId id) const {
    const Edge* e = find_by_id(edges_, id);
    if (!e) throw std::logic_error("unknown edge id");
    return *e;
}

Edge& WeightedMultigraph::edge_mut(EdgeId id) {
    Edge* e = find_by_id(edges_, id);
    if (!e) throw std::logic_error("unknown edge id");
    return *e;
}

const WeightedMultigraph::VertexRec& WeightedMultigraph::vertex_rec(VertexId id) const {
    const VertexRec* v = find_by_id(verts_, id);
    if (!v) throw std::logic_error("unknown vertex id");
    return *v;
}

WeightedMultigraph::VertexRec& WeightedMultigraph::vertex_mut(VertexId id) {
    VertexRec* v = find_by_id(verts_, id);
    if (!v) throw std::logic_error("unknown vertex id");
    return *v;
}

bool WeightedMultigraph::vertex_alive(VertexId id) const {
    const VertexRec* v = find_by_id(verts_, id);
    return v && v->alive;
}

bool WeightedMultigraph::edge_alive(EdgeId id) const {
    const Edge* e = find_by_id(edges_, id);
    return e && e->alive;
}

void WeightedMultigraph::remove_edge(EdgeId id) {
    Edge& e = edge_mut(id);
    assert(e.alive);
    e.alive = false;
    alive_edges_--;
    if (e.forced) forced_edges_--;
}

void WeightedMultigraph::remove_vertex(VertexId id) {
    VertexRec& v = vertex_mut(id);
    assert(v.alive);
    assert(degree(id) == 0);
    v.alive = false;
    alive_vertices_--;
}

void WeightedMultigraph::set_forced(EdgeId id) {
    Edge& e = edge_mut(id);
    assert(e.alive);
    if (!e.forced) {
        e.forced = true;
        forced_edges_++;
    }
}

void WeightedMultigraph::set_cost(EdgeId id, Cost c) { edge_mut(id).cost = c; }

void WeightedMultigraph::move_endpoint(EdgeId id, VertexId from, VertexId to) {
    Edge& e = edge_mut(id);
    assert(e.alive && e.touches(from));
    if (e.u == from) e.u = to;
    else e.v = to;
    auto& inc = vertex_mut(from).inc;
    inc.erase(std::find(inc.begin(), inc.end(), id));
    auto& dst = vertex_mut(to).inc;
    dst.insert(std::lower_bound(dst.begin(), dst.end(), id), id);
}

int WeightedMultigraph::degree(VertexId v) const {
    int d = 0;
    for (EdgeId id : vertex_rec(v).inc) {
        const Edge& e = edge(id);
        if (!e.alive) continue;
        d += e.is_loop() ? 2 : 1;
    }
    return d;
}

int WeightedMultigraph::unforced_degree(VertexId v) const {
    int d = 0;
    for (EdgeId id : vertex_rec(v).inc) {
        const Edge& e = edge(id);
        if (!e.alive || e.forced) continue;
        d += e.is_loop() ? 2 : 1;
    }
    return d;
}

int WeightedMultigraph::forced_degree(VertexId v) const {
    int d = 0;
    for (EdgeId id : vertex_rec(v).inc) {
        const Edge& e = edge(id);
        if (!e.alive || !e.forced) continue;
        d += e.is_loop() ? 2 : 1;
    }
    return d;
}

std::vector<VertexId> WeightedMultigraph::vertex_ids() const {
    std::vector<VertexId> out;
    out.reserve(alive_vertices_);
    for (const auto& v : verts_)
        if (v.alive) out.push_back(v.id);
    return out;
}

std::vector<EdgeId> WeightedMultigraph::edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(alive_edges_);
    for (const auto& e : edges_)
        if (e.alive) out.push_back(e.id);
    return out;
}

std::vector<EdgeId> WeightedMultigraph::forced_edge_ids() const {
    std::vector<EdgeId> out;
    for (const auto& e : edges_)
        if (e.alive && e.forced) out.push_back(e.id);
    return out;
}

std::vector<EdgeId> WeightedMultigraph::incident(VertexId v) const {
    std::vector<EdgeId> out;
    for (EdgeId id : vertex_rec(v).inc)
        if (edge(id).alive) out.push_back(id);
    return out;
}

Cost WeightedMultigraph::total_cost() const {
    Cost t = 0;
    for (const auto& e : edges_)
        if (e.alive) t += e.cost;
    return t;
}

std::vector<EdgeId> CycleDescriptor::key() const {
    std::vector<EdgeId> k = edges;
    std::sort(k.begin(), k.end());
    return k;
}

std::optional<int> girth(const WeightedMultigraph& g) {
    const auto verts = g.vertex_ids();
    if (verts.empty()) return std::nullopt;

    // multigraph short cycles first
    std::set<std::pair<VertexId, VertexId>> seen;
    bool parallel = false;
    for (EdgeId id : g.edge_ids()) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) return 1;
        auto p = std::minmax(e.u, e.v);
        if (!seen.insert({p.first, p.second}).second) parallel = true;
    }
    if (parallel) return 2;

    // simple graph: BFS from every root; exact because some root lies on a
    // shortest cycle
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& p : seen) {
        adj[p.first].push_back(p.second);
        adj[p.second].push_back(p.first);
    }
    int best = -1;
    std::map<VertexId, int> dist;
    std::map<VertexId, VertexId> parent;
    for (VertexId root : verts) {
        dist.clear();
        parent.clear();
        dist[root] = 0;
        parent[root] = kNoVertex;
        std::deque<VertexId> q{root};
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            if (best > 0 && 2 * dist[u] + 1 >= best) continue;
            for (VertexId w : adj[u]) {
                auto it = dist.find(w);
                if (it == dist.end()) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    int c = dist[u] + it->second + 1;
                    if (best < 0 || c < best) best = c;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<CycleDescriptor> find_unforced_cycles(const WeightedMultigraph& g, int length,
                                                  bool live_only) {
    assert(length == 4 || length == 6);
    std::vector<CycleDescriptor> out;
    std::set<std::vector<EdgeId>> keys;

    const auto verts = g.vertex_ids();
    std::vector<VertexId> path_v;
    std::vector<EdgeId> path_e;

    // DFS rooted at the minimum vertex of the cycle
    auto usable = [&](const Edge& e) { return e.alive && (!live_only || !e.forced); };

    std::function<void(VertexId, VertexId)> extend = [&](VertexId root, VertexId cur) {
        if ((int)path_v.size() == length) {
            for (EdgeId id : g.incident(cur)) {
                const Edge& e = g.edge(id);
                if (!usable(e) || e.is_loop()) continue;
                if (e.other(cur) != root) continue;
                path_e.push_back(id);
                std::vector<EdgeId> k = path_e;
                std::sort(k.begin(), k.end());
                if (keys.insert(k).second) {
                    CycleDescriptor d;
                    d.vertices = path_v;
                    d.edges = path_e;
                    d.length = length;
                    out.push_back(std::move(d));
                }
                path_e.pop_back();
            }
            return;
        }
        for (EdgeId id : g.incident(cur)) {
            const Edge& e = g.edge(id);
            if (!usable(e) || e.is_loop()) continue;
            VertexId w = e.other(cur);
            if (w <= root) continue;  // root stays minimal
            if (std::find(path_v.begin(), path_v.end(), w) != path_v.end()) continue;
            path_v.push_back(w);
            path_e.push_back(id);
            extend(root, w);
            path_v.pop_back();
            path_e.pop_back();
        }
    };

    for (VertexId root : verts) {
        path_v = {root};
        path_e.clear();
        extend(root, root);
    }

    // attached edge counts + deterministic order
    for (auto& d : out) {
        std::set<EdgeId> cyc(d.edges.begin(), d.edges.end());
        std::set<EdgeId> attached;
        for (VertexId v : d.vertices)
            for (EdgeId id : g.incident(v)) {
                if (cyc.count(id)) continue;
                if (g.edge(id).forced) attached.insert(id);
            }
        d.attached_selected_count = (int)attached.size();
    }
    std::sort(out.begin(), out.end(),
              [](const CycleDescriptor& a, const CycleDescriptor& b) { return a.key() < b.key(); });
    return out;
}

namespace {

// connected components of the unforced subgraph (vertices with at least one
// unforced incident edge; isolated-in-G\F vertices form singleton components)
struct UnforcedComponents {
    std::vector<std::vector<VertexId>> comp_verts;
    std::vector<std::vector<EdgeId>> comp_edges;
};

UnforcedComponents unforced_components(const WeightedMultigraph& g) {
    UnforcedComponents out;
    std::set<VertexId> visited;
    for (VertexId root : g.vertex_ids()) {
        if (visited.count(root)) continue;
        std::vector<VertexId> cv;
        std::set<EdgeId> ce;
        std::deque<VertexId> q{root};
        visited.insert(root);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            cv.push_back(u);
            for (EdgeId id : g.incident(u)) {
                const Edge& e = g.edge(id);
                if (e.forced) continue;
                ce.insert(id);
                VertexId w = e.other(u);
                if (!visited.count(w)) {
                    visited.insert(w);
                    q.push_back(w);
                }
            }
        }
        out.comp_verts.push_back(std::move(cv));
        out.comp_edges.emplace_back(ce.begin(), ce.end());
    }
    return out;
}

bool component_is_4cycle(const WeightedMultigraph& g, const std::vector<VertexId>& cv,
                         const std::vector<EdgeId>& ce) {
    if (cv.size() != 4 || ce.size() != 4) return false;
    for (VertexId v : cv) {
        int d = 0;
        for (EdgeId id : ce)
            if (g.edge(id).touches(v)) d += g.edge(id).is_loop() ? 2 : 1;
        if (d != 2) return false;
    }
    return true;  // 4 vertices, 4 edges, all degree 2: a single 4-cycle
}

}  // namespace

Measures measures(const WeightedMultigraph& g) {
    Measures m;
    auto comps = unforced_components(g);
    for (std::size_t i = 0; i < comps.comp_verts.size(); i++)
        if (component_is_4cycle(g, comps.comp_verts[i], comps.comp_edges[i])) m.cycles4++;
    for (VertexId v : g.vertex_ids())
        if (g.forced_degree(v) == 0) m.f++;
    m.s = g.num_vertices() - g.num_forced() - 2 * m.cycles4;
    return m;
}

std::set<EdgeId> isolated_4cycle_edges(const WeightedMultigraph& g) {
    std::set<EdgeId> out;
    auto comps = unforced_components(g);
    for (std::size_t i = 0; i < comps.comp_verts.size(); i++)
        if (component_is_4cycle(g, comps.comp_verts[i], comps.comp_edges[i]))
            out.insert(comps.comp_edges[i].begin(), comps.comp_edges[i].end());
    return out;
}

bool is_connected(const WeightedMultigraph& g) {
    auto verts = g.vertex_ids();
    if (verts.empty()) return true;
    std::set<VertexId> seen{verts[0]};
    std::deque<VertexId> q{verts[0]};
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (EdgeId id : g.incident(u)) {
            VertexId w = g.edge(id).other(u);
            if (seen.insert(w).second) q.push_back(w);
        }
    }
    return (int)seen.size() == g.num_vertices();
}

bool is_cubic(const WeightedMultigraph& g) {
    for (VertexId v : g.vertex_ids())
        if (g.degree(v) != 3) return false;
    return true;
}

bool is_simple(const WeightedMultigraph& g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId id : g.edge_ids()) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) return false;
        auto p = std::minmax(e.u, e.v);
        if (!seen.insert({p.first, p.second}).second) return false;
    }
    return true;
}

bool has_triangle(const WeightedMultigraph& g) {
    for (EdgeId id : g.edge_ids()) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) continue;
        for (EdgeId id2 : g.incident(e.u)) {
            if (id2 == id) continue;
            const Edge& e2 = g.edge(id2);
            if (e2.is_loop()) continue;
            VertexId w = e2.other(e.u);
            if (w == e.v) continue;
            for (EdgeId id3 : g.incident(w)) {
                const Edge& e3 = g.edge(id3);
                if (!e3.is_loop() && e3.other(w) == e.v) return true;
            }
        }
    }
    return false;
}

}  // namespace ctsp
