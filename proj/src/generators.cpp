#include "ctsp/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ctsp/cages_data.hpp"

namespace ctsp {

void assign_costs(WeightedMultigraph& g, const CostPolicy& policy) {
    if (policy.kind == CostPolicy::Kind::Unit) return;  // generators emit cost 1
    if (policy.lo < 0 || policy.hi < policy.lo)
        throw std::invalid_argument("assign_costs: bad uniform range");
    Rng rng(policy.seed);
    for (EdgeId id : g.edge_ids()) g.set_cost(id, rng.range(policy.lo, policy.hi));
}

WeightedMultigraph random_cubic(int n, std::uint64_t seed, const CostPolicy& costs) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic: 3-regular graphs need even order >= 4");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; attempt++) {
        // three stubs per vertex, matched by a random shuffle
        std::vector<int> stubs(3 * n);
        for (int i = 0; i < 3 * n; i++) stubs[i] = i / 3;
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 3 * n && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            else if (!seen.insert(std::minmax(u, v)).second) ok = false;
            else edges.push_back({u, v});
        }
        if (!ok) continue;
        WeightedMultigraph g;
        for (int i = 0; i < n; i++) g.add_vertex();
        std::sort(edges.begin(), edges.end(),
                  [](auto a, auto b) { return std::minmax(a.first, a.second) < std::minmax(b.first, b.second); });
        for (auto [u, v] : edges)
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), 1);
        if (!is_connected(g)) continue;
        assign_costs(g, costs);
        return g;
    }
    throw std::runtime_error("random_cubic: rejection sampling failed");
}

WeightedMultigraph cage(int girth_value) {
    const detail::CageEntry* entry = detail::cage_entry(girth_value);
    if (!entry) throw std::invalid_argument("cage: girth must be in 3..11");
    WeightedMultigraph g;
    for (int i = 0; i < entry->n; i++) g.add_vertex();
    for (auto [u, v] : entry->edges) g.add_edge(u, v, 1);
    auto girth_found = girth(g);
    if (!girth_found || *girth_found != girth_value)
        throw std::logic_error("cage: catalog entry failed girth validation");
    return g;
}

WeightedMultigraph hc_rich_family(int n, const CostPolicy& costs) {
    if (n < 6 || n % 6 != 0)
        throw std::invalid_argument("hc_rich_family: n must be a positive multiple of 6");
    WeightedMultigraph g;
    for (int i = 0; i < n; i++) g.add_vertex();
    if (n == 6) {
        // C6 with two doubled edges and one long chord; exactly 4 tours
        g.add_edge(0, 1, 1);
        g.add_edge(1, 2, 1);
        g.add_edge(1, 2, 1);
        g.add_edge(2, 3, 1);
        g.add_edge(3, 4, 1);
        g.add_edge(4, 5, 1);
        g.add_edge(4, 5, 1);
        g.add_edge(5, 0, 1);
        g.add_edge(0, 3, 1);
        assign_costs(g, costs);
        return g;
    }
    const int k = n / 6;
    for (int i = 0; i < k; i++) {
        VertexId base = static_cast<VertexId>(6 * i);
        // K_{3,3} on {base..base+2} x {base+3..base+5} minus (base+2, base+5)
        for (int a = 0; a < 3; a++)
            for (int b = 3; b < 6; b++) {
                if (a == 2 && b == 5) continue;
                g.add_edge(base + a, base + b, 1);
            }
    }
    for (int i = 0; i < k; i++) {
        VertexId from = static_cast<VertexId>(6 * i + 5);
        VertexId to = static_cast<VertexId>(6 * ((i + 1) % k) + 2);
        g.add_edge(from, to, 1);
    }
    assign_costs(g, costs);
    return g;
}

}  // namespace ctsp
