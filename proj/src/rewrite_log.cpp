#include "ctsp/rewrite_log.hpp"

#include <map>
#include <stdexcept>

namespace ctsp {

std::set<EdgeId> RewriteLog::expand(const std::set<EdgeId>& current) const {
    std::set<EdgeId> s = current;
    for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
        const RewriteRecord& r = *it;
        if (std::holds_alternative<ForcedFlagSet>(r)) continue;
        if (const auto* rem = std::get_if<EdgeRemoved>(&r)) {
            if (s.count(rem->edge))
                throw std::logic_error("expand: tour uses a removed edge");
            continue;
        }
        if (const auto* mrg = std::get_if<ForcedPathMerge>(&r)) {
            auto hit = s.find(mrg->merged);
            if (hit == s.end())
                throw std::logic_error("expand: tour misses a merged forced edge");
            s.erase(hit);
            s.insert(mrg->replaced_a);
            s.insert(mrg->replaced_b);
            continue;
        }
        const auto& tc = std::get<TriangleContraction>(r);
        int used[3], cnt = 0;
        for (int i = 0; i < 3; i++)
            if (s.count(tc.external[i])) used[cnt++] = i;
        if (cnt != 2)
            throw std::logic_error("expand: contracted vertex not traversed exactly once");
        // entering at vertices used[0], used[1]; route through the third
        // vertex, i.e. add the triangle edges opposite the two used corners
        s.insert(tc.opposite_edge[used[0]]);
        s.insert(tc.opposite_edge[used[1]]);
    }
    return s;
}

Cost cost_of(const WeightedMultigraph& input, const std::set<EdgeId>& edges) {
    Cost t = 0;
    for (EdgeId id : edges) t += input.edge(id).cost;
    return t;
}

bool is_hamiltonian_cycle(const WeightedMultigraph& input, const std::set<EdgeId>& edges) {
    if (edges.empty()) return false;
    std::map<VertexId, int> deg;
    for (VertexId v : input.vertex_ids()) deg[v] = 0;
    for (EdgeId id : edges) {
        const Edge& e = input.edge(id);
        if (e.is_loop()) return input.num_vertices() == 1;
        deg[e.u]++;
        deg[e.v]++;
    }
    for (auto& [v, d] : deg)
        if (d != 2) return false;
    if ((int)edges.size() != input.num_vertices()) return false;
    // connectivity over the chosen edges
    std::map<VertexId, std::vector<VertexId>> adj;
    for (EdgeId id : edges) {
        const Edge& e = input.edge(id);
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::set<VertexId> seen{adj.begin()->first};
    std::vector<VertexId> stack{adj.begin()->first};
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adj[u])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return (int)seen.size() == input.num_vertices();
}

}  // namespace ctsp
