#include "ctsp/closure.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ctsp {

namespace {

struct FourCycle {
    std::array<EdgeId, 4> edges;    // cyclic order
    std::array<VertexId, 4> verts;  // verts[i] joins edges[i-1], edges[i]
};

// components of G\F, each required to be a 4-cycle
std::optional<std::vector<FourCycle>> cover_cycles(const WeightedMultigraph& g) {
    std::vector<FourCycle> cycles;
    std::set<VertexId> visited;
    for (VertexId root : g.vertex_ids()) {
        if (visited.count(root)) continue;
        // walk the unforced component starting at root
        std::vector<VertexId> vs;
        std::vector<EdgeId> es;
        VertexId cur = root;
        EdgeId came = kNoEdge;
        for (;;) {
            visited.insert(cur);
            vs.push_back(cur);
            EdgeId next = kNoEdge;
            int unforced = 0;
            for (EdgeId id : g.incident(cur)) {
                const Edge& e = g.edge(id);
                if (e.forced) continue;
                if (e.is_loop()) return std::nullopt;
                unforced++;
                if (id != came && next == kNoEdge) next = id;
            }
            if (unforced != 2) return std::nullopt;
            if (next == kNoEdge) return std::nullopt;
            es.push_back(next);
            VertexId to = g.edge(next).other(cur);
            if (to == root) break;
            if (visited.count(to)) return std::nullopt;
            came = next;
            cur = to;
            if (vs.size() > 4) return std::nullopt;
        }
        if (vs.size() != 4 || es.size() != 4) return std::nullopt;
        FourCycle c;
        std::copy(vs.begin(), vs.end(), c.verts.begin());
        std::copy(es.begin(), es.end(), c.edges.begin());
        cycles.push_back(c);
    }
    return cycles;
}

struct Dsu {
    std::map<VertexId, VertexId> parent;
    VertexId find(VertexId v) {
        auto it = parent.find(v);
        if (it == parent.end()) return parent[v] = v, v;
        if (it->second == v) return v;
        return it->second = find(it->second);
    }
    bool join(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// cheaper opposite pair; tie: the pair containing the smallest edge id
std::pair<std::array<EdgeId, 2>, std::array<EdgeId, 2>> split_pairs(const WeightedMultigraph& g,
                                                                    const FourCycle& c) {
    std::array<EdgeId, 2> p0{c.edges[0], c.edges[2]};
    std::array<EdgeId, 2> p1{c.edges[1], c.edges[3]};
    Cost c0 = g.edge(p0[0]).cost + g.edge(p0[1]).cost;
    Cost c1 = g.edge(p1[0]).cost + g.edge(p1[1]).cost;
    EdgeId m0 = std::min(p0[0], p0[1]), m1 = std::min(p1[0], p1[1]);
    if (c0 < c1 || (c0 == c1 && m0 < m1)) return {p0, p1};
    return {p1, p0};
}

ClosureResult finish(const WeightedMultigraph& g, const RewriteLog& log,
                     const WeightedMultigraph& input, const std::set<EdgeId>& chosen) {
    std::set<EdgeId> tour;
    for (EdgeId id : g.forced_edge_ids()) tour.insert(id);
    tour.insert(chosen.begin(), chosen.end());
    ClosureResult r;
    r.ok = true;
    r.tour_input_edges = log.expand(tour);
    r.cost = cost_of(input, r.tour_input_edges);
    return r;
}

}  // namespace

bool is_disjoint_4cycle_cover(const WeightedMultigraph& g) {
    if (g.num_vertices() == 0) return false;
    return cover_cycles(g).has_value();
}

ClosureResult solve_4cycle_closure(const WeightedMultigraph& g, const RewriteLog& log,
                                   const WeightedMultigraph& input) {
    auto cycles_opt = cover_cycles(g);
    if (!cycles_opt) throw std::logic_error("solve_4cycle_closure: not a disjoint 4-cycle cover");
    const auto& cycles = *cycles_opt;

    // H = cheaper opposite pair per cycle
    std::vector<std::array<EdgeId, 2>> chosen(cycles.size()), complement(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); i++) {
        auto [h, rest] = split_pairs(g, cycles[i]);
        chosen[i] = h;
        complement[i] = rest;
    }

    // components of F u H
    Dsu dsu;
    for (EdgeId id : g.forced_edge_ids()) dsu.join(g.edge(id).u, g.edge(id).v);
    for (const auto& pair : chosen)
        for (EdgeId id : pair) dsu.join(g.edge(id).u, g.edge(id).v);

    // component-graph edges: one per cycle whose chosen pair spans two
    // components; weight = swap delta = cost(C_i \ H_i) - cost(H_i) >= 0
    struct Swap {
        std::size_t cycle;
        Cost delta;
        VertexId ka, kb;
    };
    std::vector<Swap> swaps;
    for (std::size_t i = 0; i < cycles.size(); i++) {
        VertexId ka = dsu.find(g.edge(chosen[i][0]).u);
        VertexId kb = dsu.find(g.edge(chosen[i][1]).u);
        std::set<VertexId> comps{ka, kb};
        assert(comps.size() <= 2);
        if (ka == kb) continue;
        Cost delta = g.edge(complement[i][0]).cost + g.edge(complement[i][1]).cost -
                     g.edge(chosen[i][0]).cost - g.edge(chosen[i][1]).cost;
        assert(delta >= 0);
        swaps.push_back({i, delta, ka, kb});
    }

    // Kruskal; ties by component-graph edge creation order (= cycle order)
    std::stable_sort(swaps.begin(), swaps.end(),
                     [](const Swap& a, const Swap& b) { return a.delta < b.delta; });
    Dsu mst;
    std::set<VertexId> comp_ids;
    for (VertexId v : g.vertex_ids()) comp_ids.insert(dsu.find(v));
    Cost mst_cost = 0;
    std::size_t joined = 0;
    std::set<std::size_t> swapped;
    for (const Swap& s : swaps) {
        if (mst.join(s.ka, s.kb)) {
            mst_cost += s.delta;
            swapped.insert(s.cycle);
            joined++;
        }
    }
    if (joined + 1 != comp_ids.size()) return ClosureResult::failure();

    std::set<EdgeId> final_edges;
    for (std::size_t i = 0; i < cycles.size(); i++) {
        const auto& pair = swapped.count(i) ? complement[i] : chosen[i];
        final_edges.insert(pair.begin(), pair.end());
    }
    ClosureResult r = finish(g, log, input, final_edges);
    (void)mst_cost;
    return r;
}

ClosureResult brute_force_closure(const WeightedMultigraph& g, const RewriteLog& log,
                                  const WeightedMultigraph& input) {
    auto cycles_opt = cover_cycles(g);
    if (!cycles_opt) throw std::logic_error("brute_force_closure: not a disjoint 4-cycle cover");
    const auto& cycles = *cycles_opt;
    if (cycles.size() > 20)
        throw std::invalid_argument("brute_force_closure: more than 20 cycles");

    std::vector<VertexId> verts = g.vertex_ids();
    std::map<VertexId, int> vidx;
    for (std::size_t i = 0; i < verts.size(); i++) vidx[verts[i]] = (int)i;

    std::optional<Cost> best;
    std::set<EdgeId> best_edges;
    const std::size_t k = cycles.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); mask++) {
        std::set<EdgeId> sel;
        for (std::size_t i = 0; i < k; i++) {
            const auto& c = cycles[i];
            if (mask & (std::size_t{1} << i)) {
                sel.insert(c.edges[0]);
                sel.insert(c.edges[2]);
            } else {
                sel.insert(c.edges[1]);
                sel.insert(c.edges[3]);
            }
        }
        // connected single cycle over F u sel?
        Dsu dsu;
        bool ok = true;
        int joins = 0;
        for (EdgeId id : g.forced_edge_ids()) {
            const Edge& e = g.edge(id);
            if (dsu.join(e.u, e.v)) joins++;
        }
        for (EdgeId id : sel) {
            const Edge& e = g.edge(id);
            if (dsu.join(e.u, e.v)) joins++;
        }
        if (joins != (int)verts.size() - 1) ok = false;
        if (!ok) continue;
        Cost total = 0;
        for (EdgeId id : g.forced_edge_ids()) total += g.edge(id).cost;
        for (EdgeId id : sel) total += g.edge(id).cost;
        if (!best || total < *best) {
            best = total;
            best_edges = sel;
        }
    }
    if (!best) return ClosureResult::failure();
    return finish(g, log, input, best_edges);
}

}  // namespace ctsp
