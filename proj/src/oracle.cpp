#include "ctsp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace ctsp {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

struct Dense {
    int n;
    std::vector<VertexId> label;
    std::vector<std::vector<Cost>> w;          // min cost, kInf if absent
    std::vector<std::vector<std::uint32_t>> mult;  // parallel multiplicity
};

Dense densify(const WeightedMultigraph& g) {
    Dense d;
    d.label = g.vertex_ids();
    d.n = (int)d.label.size();
    std::map<VertexId, int> idx;
    for (int i = 0; i < d.n; i++) idx[d.label[i]] = i;
    d.w.assign(d.n, std::vector<Cost>(d.n, kInf));
    d.mult.assign(d.n, std::vector<std::uint32_t>(d.n, 0));
    for (EdgeId id : g.edge_ids()) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) continue;
        int a = idx[e.u], b = idx[e.v];
        d.w[a][b] = std::min(d.w[a][b], e.cost);
        d.w[b][a] = d.w[a][b];
        d.mult[a][b]++;
        d.mult[b][a]++;
    }
    return d;
}

}  // namespace

OracleResult held_karp(const WeightedMultigraph& g) {
    Dense d = densify(g);
    const int n = d.n;
    if (n > 20) throw std::invalid_argument("held_karp: n > 20");
    OracleResult r;
    if (n == 0) return r;
    if (n == 1) {
        // a single vertex has a degenerate tour only via a self-loop
        Cost best = kInf;
        for (EdgeId id : g.edge_ids())
            if (g.edge(id).is_loop()) best = std::min(best, g.edge(id).cost);
        if (best < kInf) {
            r.has_tour = true;
            r.cost = best;
        }
        return r;
    }
    if (n == 2) {
        // two parallel edges form the only possible tour
        std::vector<Cost> costs;
        for (EdgeId id : g.edge_ids()) {
            const Edge& e = g.edge(id);
            if (!e.is_loop()) costs.push_back(e.cost);
        }
        std::sort(costs.begin(), costs.end());
        if (costs.size() >= 2) {
            r.has_tour = true;
            r.cost = costs[0] + costs[1];
        }
        return r;
    }

    const std::size_t full = std::size_t{1} << n;
    // dp[mask][v]: cheapest path 0 -> v visiting exactly mask (0 in mask)
    std::vector<std::vector<Cost>> dp(full, std::vector<Cost>(n, kInf));
    dp[1][0] = 0;
    for (std::size_t mask = 1; mask < full; mask++) {
        if (!(mask & 1)) continue;
        for (int v = 0; v < n; v++) {
            Cost base = dp[mask][v];
            if (base >= kInf) continue;
            for (int w = 1; w < n; w++) {
                if (mask & (std::size_t{1} << w)) continue;
                if (d.w[v][w] >= kInf) continue;
                Cost cand = base + d.w[v][w];
                auto& slot = dp[mask | (std::size_t{1} << w)][w];
                if (cand < slot) slot = cand;
            }
        }
    }
    Cost best = kInf;
    for (int v = 1; v < n; v++) {
        if (dp[full - 1][v] >= kInf || d.w[v][0] >= kInf) continue;
        best = std::min(best, dp[full - 1][v] + d.w[v][0]);
    }
    if (best < kInf) {
        r.has_tour = true;
        r.cost = best;
    }
    return r;
}

std::uint64_t count_hamiltonian_cycles(const WeightedMultigraph& g) {
    Dense d = densify(g);
    const int n = d.n;
    if (n > 24) throw std::invalid_argument("count_hamiltonian_cycles: n > 24");
    if (n == 0) return 0;
    if (n == 1) {
        std::uint64_t loops = 0;
        for (EdgeId id : g.edge_ids())
            if (g.edge(id).is_loop()) loops++;
        return loops;
    }
    if (n == 2) {
        std::uint64_t m = d.mult[0][1];
        return m * (m - 1) / 2;
    }

    // vertex sequences rooted at 0, direction canonical via second < last;
    // parallel edges multiply
    std::uint64_t total = 0;
    std::vector<int> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;

    std::function<void(std::uint64_t)> rec = [&](std::uint64_t ways) {
        int cur = path.back();
        if ((int)path.size() == n) {
            if (d.mult[cur][0] && path[1] < cur) total += ways * d.mult[cur][0];
            return;
        }
        for (int w = 1; w < n; w++) {
            if (used[w] || !d.mult[cur][w]) continue;
            used[w] = 1;
            path.push_back(w);
            rec(ways * d.mult[cur][w]);
            path.pop_back();
            used[w] = 0;
        }
    };
    rec(1);
    return total;
}

}  // namespace ctsp
