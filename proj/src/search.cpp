#include "ctsp/search.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

#include "ctsp/rng.hpp"

namespace ctsp {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Step3a: return "3a";
        case Provenance::Step3aPrime: return "3a'";
        case Provenance::Step3b: return "3b";
        case Provenance::Step3c: return "3c";
    }
    return "?";
}

struct CsvTraceSink::Impl {
    std::ofstream out;
};

CsvTraceSink::CsvTraceSink(const std::string& path) : impl_(new Impl) {
    impl_->out.open(path);
    if (!impl_->out) throw std::runtime_error("cannot open trace file " + path);
    impl_->out << trace_csv_header() << "\n";
}

CsvTraceSink::~CsvTraceSink() = default;

void CsvTraceSink::row(const TraceRow& r) { impl_->out << trace_csv_line(r) << "\n"; }

std::string trace_csv_header() {
    return "depth,provenance,kind,edge,s_before,f_before,s_child1,f_child1,s_child2,f_child2,a,b,d";
}

std::string trace_csv_line(const TraceRow& r) {
    std::ostringstream os;
    os << r.depth << ',' << provenance_name(r.provenance) << ',' << static_cast<char>(r.kind)
       << ',' << r.edge << ',' << r.s_before << ',' << r.f_before << ',' << r.s_child1 << ','
       << r.f_child1 << ',' << r.s_child2 << ',' << r.f_child2 << ',' << r.a << ',' << r.b << ','
       << r.d;
    return os.str();
}

namespace {

// Step 3(a): a 4-cycle in G\F with (exactly) two F-adjacent vertices; pick an
// unforced non-cycle edge at one of the free cycle vertices.
std::vector<EdgeId> step3a_candidates(const WeightedMultigraph& g) {
    for (const CycleDescriptor& c : find_unforced_cycles(g, 4, true)) {
        int fa = 0;
        for (VertexId v : c.vertices)
            if (g.forced_degree(v) >= 1) fa++;
        if (fa < 2) continue;
        std::set<EdgeId> cyc(c.edges.begin(), c.edges.end());
        std::vector<EdgeId> cand;
        for (VertexId v : c.vertices) {
            if (g.forced_degree(v) >= 1) continue;
            for (EdgeId id : g.incident(v))
                if (!cyc.count(id) && !g.edge(id).forced) cand.push_back(id);
        }
        if (!cand.empty()) {
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            return cand;
        }
    }
    return {};
}

// Step 3(a'): live 6-cycles having a vertex with a forced attached edge.
// Returns the ordered candidate edges of the selected cycle.
std::vector<EdgeId> step3a_prime_candidates(const WeightedMultigraph& g) {
    const auto cycles = find_unforced_cycles(g, 6, true);
    const CycleDescriptor* pick = nullptr;
    for (const auto& c : cycles) {
        bool anchored = false;
        for (VertexId v : c.vertices)
            if (g.forced_degree(v) >= 1) anchored = true;
        if (!anchored) continue;
        // most selected attached edges; ties fall to the first in key order
        if (!pick || c.attached_selected_count > pick->attached_selected_count) pick = &c;
    }
    if (!pick) return {};
    std::vector<EdgeId> both, single;
    for (std::size_t i = 0; i < pick->edges.size(); i++) {
        EdgeId id = pick->edges[i];
        const Edge& e = g.edge(id);
        int fy = g.forced_degree(e.u) >= 1;
        int fz = g.forced_degree(e.v) >= 1;
        if (fy && fz) both.push_back(id);
        else if (fy || fz) single.push_back(id);
    }
    std::sort(both.begin(), both.end());
    std::sort(single.begin(), single.end());
    // prefer endpoints forced on both sides
    both.insert(both.end(), single.begin(), single.end());
    return both;
}

std::vector<EdgeId> step3b_candidates(const WeightedMultigraph& g) {
    std::vector<EdgeId> cand;
    if (g.num_forced() == 0) return cand;
    // isolated 4-cycles are settled by Step 2; branching inside them breaks
    // the measure. With F nonempty and G connected every other component of
    // G\F touches F, so a candidate always exists.
    std::set<EdgeId> settled = isolated_4cycle_edges(g);
    for (EdgeId id : g.edge_ids()) {
        const Edge& e = g.edge(id);
        if (e.forced || settled.count(id)) continue;
        if (g.forced_degree(e.u) >= 1 || g.forced_degree(e.v) >= 1) cand.push_back(id);
    }
    return cand;
}

Provenance derive_provenance(const WeightedMultigraph& g, EdgeId e) {
    auto a = step3a_candidates(g);
    if (std::find(a.begin(), a.end(), e) != a.end()) return Provenance::Step3a;
    if (a.empty()) {
        auto ap = step3a_prime_candidates(g);
        if (std::find(ap.begin(), ap.end(), e) != ap.end()) return Provenance::Step3aPrime;
    }
    if (g.num_forced() > 0) {
        const Edge& ed = g.edge(e);
        if (g.forced_degree(ed.u) >= 1 || g.forced_degree(ed.v) >= 1) return Provenance::Step3b;
    }
    return Provenance::Step3c;
}

}  // namespace

std::pair<EdgeId, Provenance> choose_branch_edge(const WeightedMultigraph& g,
                                                 const SolveConfig& cfg, Rng* rng) {
    auto a = step3a_candidates(g);
    if (!a.empty()) return {a.front(), Provenance::Step3a};
    auto ap = step3a_prime_candidates(g);
    if (!ap.empty()) return {ap.front(), Provenance::Step3aPrime};
    if (g.num_forced() > 0) {
        auto b = step3b_candidates(g);
        if (!b.empty()) return {b.front(), Provenance::Step3b};
        throw std::logic_error("choose_branch_edge: F nonempty but no adjacent unforced edge");
    }
    auto all = g.edge_ids();
    if (all.empty()) throw std::logic_error("choose_branch_edge: no edges");
    if (cfg.deterministic || rng == nullptr) return {all.front(), Provenance::Step3c};
    return {all[rng->below(all.size())], Provenance::Step3c};
}

BranchKind classify_branch(const WeightedMultigraph& g, EdgeId edge, Provenance prov) {
    if (prov == Provenance::Step3a) return BranchKind::D;

    // B: the edge lies on a live 6-cycle all of whose vertices touch F
    for (const CycleDescriptor& c : find_unforced_cycles(g, 6, true)) {
        if (std::find(c.edges.begin(), c.edges.end(), edge) == c.edges.end()) continue;
        bool all_forced = true;
        for (VertexId v : c.vertices)
            if (g.forced_degree(v) == 0) all_forced = false;
        if (all_forced) return BranchKind::B;
    }

    // A-branches are structural: Step 3(a') regularly selects edges in the
    // A configuration (a live 6-cycle hanging off one forced edge), and the
    // branch-count bookkeeping has to see them as A.
    if (prov == Provenance::Step3b || prov == Provenance::Step3aPrime) {
        const Edge& e = g.edge(edge);
        int fu = g.forced_degree(e.u), fv = g.forced_degree(e.v);
        VertexId y, z;
        if (fu >= 1 && fv == 0) {
            y = e.u;
            z = e.v;
        } else if (fv >= 1 && fu == 0) {
            y = e.v;
            z = e.u;
        } else {
            return BranchKind::D;
        }
        if (g.forced_degree(y) != 1) return BranchKind::D;
        (void)z;
        // the third edge at y must not touch a second forced edge
        for (EdgeId id : g.incident(y)) {
            if (id == edge || g.edge(id).forced) continue;
            VertexId w = g.edge(id).other(y);
            if (g.forced_degree(w) != 0) return BranchKind::D;
        }
        return BranchKind::A;
    }
    return BranchKind::D;
}

namespace {

struct Frame {
    WeightedMultigraph g;
    RewriteLog log;
    int depth = 0;
    int a = 0, b = 0, d = 0;
    int phase = 0;  // 0 entering, 1 child1 running, 2 child2 running
    Measures m{};
    EdgeId branch_edge = kNoEdge;
    Provenance prov = Provenance::Step3c;
    BranchKind kind = BranchKind::D;
    Outcome best = Outcome::no_tour();
    int s_child[2] = {-1, -1};
    int f_child[2] = {-1, -1};
};

struct ChildResult {
    Outcome out;
    int s = -1, f = -1;  // fixpoint measures; -1 when resolved inside Step 1
};

}  // namespace

std::pair<Outcome, SearchStats> solve(const WeightedMultigraph& input, const SolveConfig& cfg) {
    if (!is_connected(input)) throw std::invalid_argument("solve: input graph is disconnected");
    if (!is_cubic(input)) throw std::invalid_argument("solve: input graph is not 3-regular");

    SearchStats stats;
    stats.n = input.num_vertices();
    Rng rng(cfg.seed);
    IdAllocator ids = IdAllocator::for_graph(input);
    std::size_t script_pos = 0;

    std::optional<Cost> best_known;  // for --prune only

    std::vector<Frame> stack;
    {
        Frame root;
        root.g = input;
        stack.push_back(std::move(root));
    }

    ChildResult res;
    bool have_res = false;
    Outcome final_out = Outcome::no_tour();

    auto leaf_checks = [&](const Frame& fr) {
        stats.leaves++;
        stats.max_depth = std::max(stats.max_depth, fr.depth);
        stats.max_3a7b = std::max(stats.max_3a7b, 3 * fr.a + 7 * fr.b);
        stats.max_a = std::max(stats.max_a, fr.a);
        stats.max_b = std::max(stats.max_b, fr.b);
        if (cfg.check_invariants) {
            if (3 * fr.a + 7 * fr.b > stats.n || fr.a > stats.n / 4 || fr.b > stats.n / 7) {
                std::ostringstream os;
                os << "path invariant violated at leaf: a=" << fr.a << " b=" << fr.b
                   << " n=" << stats.n;
                throw InvariantViolation(os.str());
            }
        }
    };

    while (!stack.empty()) {
        Frame& fr = stack.back();

        if (have_res) {
            have_res = false;
            int ci = fr.phase - 1;
            fr.s_child[ci] = res.s;
            fr.f_child[ci] = res.f;
            if (res.out.has_tour && (!fr.best.has_tour || res.out.cost < fr.best.cost))
                fr.best = res.out;
            if (res.out.has_tour && (!best_known || res.out.cost < *best_known))
                best_known = res.out.cost;
            if (fr.phase == 1) {
                fr.phase = 2;
                // Step 5 child: remove the edge
                bool skip = false;
                if (cfg.prune && best_known) {
                    Cost lb = 0;
                    for (EdgeId id : fr.g.forced_edge_ids()) lb += fr.g.edge(id).cost;
                    if (lb >= *best_known) skip = true;
                }
                if (skip) {
                    stats.leaves++;  // counted as an abandoned leaf
                    ChildResult r2;
                    res = r2;
                    have_res = true;
                    continue;
                }
                Frame child;
                child.g = fr.g;
                child.log = fr.log;
                child.g.remove_edge(fr.branch_edge);
                child.log.push(EdgeRemoved{fr.branch_edge});
                child.depth = fr.depth + 1;
                child.a = fr.a + (fr.kind == BranchKind::A);
                child.b = fr.b + (fr.kind == BranchKind::B);
                child.d = fr.d + (fr.kind == BranchKind::D);
                stack.push_back(std::move(child));
                continue;
            }
            // both children done
            if (cfg.trace) {
                TraceRow row{fr.depth,
                             fr.prov,
                             fr.kind,
                             fr.branch_edge,
                             fr.m.s,
                             fr.m.f,
                             fr.s_child[0],
                             fr.f_child[0],
                             fr.s_child[1],
                             fr.f_child[1],
                             fr.a + (fr.kind == BranchKind::A),
                             fr.b + (fr.kind == BranchKind::B),
                             fr.d + (fr.kind == BranchKind::D)};
                cfg.trace->row(row);
            }
            res = ChildResult{fr.best, fr.m.s, fr.m.f};
            have_res = true;
            stack.pop_back();
            continue;
        }

        // entering
        auto sim = simplify(fr.g, fr.log, ids, input, cfg.rule_tap);
        for (const AppliedRule& ar : sim.applied)
            if (ar.rule == 'i' && ar.note.find("parallel-after-contraction") != std::string::npos)
                stats.contraction_parallel_events++;

        if (sim.solved()) {
            leaf_checks(fr);
            stats.solved_leaves++;
            Outcome out;
            out.has_tour = true;
            out.cost = sim.cost;
            out.tour_edges.assign(sim.tour_input_edges.begin(), sim.tour_input_edges.end());
            res = ChildResult{out, -1, -1};
            have_res = true;
            stack.pop_back();
            continue;
        }
        if (sim.pruned()) {
            leaf_checks(fr);
            stats.pruned_leaves++;
            res = ChildResult{Outcome::no_tour(), -1, -1};
            have_res = true;
            stack.pop_back();
            continue;
        }

        if (cfg.check_invariants) {
            // rule (e)'s guard admits the two-vertex multigraph endgame
            bool ok = is_cubic(fr.g) && !has_triangle(fr.g) &&
                      (is_simple(fr.g) || fr.g.num_vertices() <= 2);
            if (!ok) throw InvariantViolation("simplify fixpoint is not simple cubic triangle-free");
        }
        fr.m = measures(fr.g);
        if (cfg.check_invariants && (fr.m.s < 0 || fr.m.f < 0))
            throw InvariantViolation("negative measure at expanded node");

        if (is_disjoint_4cycle_cover(fr.g)) {
            leaf_checks(fr);
            stats.closure_leaves++;
            auto cr = solve_4cycle_closure(fr.g, fr.log, input);
            Outcome out;
            if (cr.ok) {
                out.has_tour = true;
                out.cost = cr.cost;
                out.tour_edges.assign(cr.tour_input_edges.begin(), cr.tour_input_edges.end());
            }
            res = ChildResult{out, fr.m.s, fr.m.f};
            have_res = true;
            stack.pop_back();
            continue;
        }

        // Step 3: pick the branch edge
        EdgeId e;
        Provenance prov;
        if (script_pos < cfg.script.size()) {
            e = cfg.script[script_pos++];
            if (!fr.g.edge_alive(e) || fr.g.edge(e).forced)
                throw std::invalid_argument("scripted edge is not an unforced live edge");
            prov = derive_provenance(fr.g, e);
        } else {
            std::tie(e, prov) = choose_branch_edge(fr.g, cfg, &rng);
        }
        fr.branch_edge = e;
        fr.prov = prov;
        fr.kind = classify_branch(fr.g, e, prov);
        stats.branches++;
        if (fr.kind == BranchKind::A) stats.a_branches++;
        else if (fr.kind == BranchKind::B) stats.b_branches++;
        else stats.d_branches++;

        fr.phase = 1;
        Frame child;
        child.g = fr.g;
        child.log = fr.log;
        child.g.set_forced(e);
        child.log.push(ForcedFlagSet{e});
        child.depth = fr.depth + 1;
        child.a = fr.a + (fr.kind == BranchKind::A);
        child.b = fr.b + (fr.kind == BranchKind::B);
        child.d = fr.d + (fr.kind == BranchKind::D);
        stack.push_back(std::move(child));
    }

    final_out = res.out;
    return {final_out, stats};
}

}  // namespace ctsp
