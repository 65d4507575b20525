#include "ctsp/invariants.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace ctsp {

namespace {

struct Slot {
    int ds, df;
};
struct Line {
    Slot c1, c2;
    bool needs_a;  // line 1 belongs to A-branches
    bool needs_b;  // line 2 belongs to B-branches
};

// recurrence line decrements: (s,f) per child
constexpr std::array<Line, 5> kLines{{
    {{3, 4}, {3, 4}, true, false},   // 2T(s-3, x-1, y, f-4)
    {{3, 0}, {3, 0}, false, true},   // 2T(s-3, x, y-1, f)
    {{5, 2}, {2, 2}, false, false},  // T(s-5,f-2) + T(s-2,f-2)
    {{4, 0}, {4, 0}, false, false},  // 2T(s-4, x, y, f)
    {{4, 2}, {3, 2}, false, false},  // T(s-4,f-2) + T(s-3,f-2)
}};

struct ChildDelta {
    bool leaf;  // resolved before reaching its own branch point
    int ds, df;
};

bool fits(const ChildDelta& c, const Slot& s) {
    return c.leaf || (c.ds >= s.ds && c.df >= s.df);
}

bool dominates_line(const Line& l, const ChildDelta& a, const ChildDelta& b) {
    return (fits(a, l.c1) && fits(b, l.c2)) || (fits(a, l.c2) && fits(b, l.c1));
}

}  // namespace

PathInvariantReport check_path_invariants(const SearchStats& stats,
                                          const std::vector<TraceRow>& rows) {
    PathInvariantReport rep;
    rep.max_3a7b = stats.max_3a7b;
    rep.max_a = stats.max_a;
    rep.max_b = stats.max_b;
    const int n = stats.n;

    auto fail = [&](const std::string& what) {
        rep.pass = false;
        if (rep.violations.size() < 32) rep.violations.push_back(what);
    };

    if (stats.max_3a7b > n) fail("leaf with 3a+7b > n");
    if (stats.max_a > n / 4) fail("leaf with a > n/4");
    if (stats.max_b > n / 7) fail("leaf with b > n/7");

    for (const TraceRow& r : rows) {
        rep.rows++;
        if (3 * r.a + 7 * r.b > n) fail("branch row with 3a+7b > n");

        // The root branch of an F-empty graph (Step 3(c), happens exactly
        // once per run) only commits one edge; the recurrence starts at the
        // states below it.
        if (r.provenance == Provenance::Step3c) {
            if (r.depth != 0) fail("Step 3(c) branch below the root");
            rep.root_rows++;
            continue;
        }

        ChildDelta c1{r.s_child1 < 0, r.s_before - r.s_child1, r.f_before - r.f_child1};
        ChildDelta c2{r.s_child2 < 0, r.s_before - r.s_child2, r.f_before - r.f_child2};
        for (const ChildDelta* c : {&c1, &c2}) {
            if (c->leaf) {
                rep.leaf_children++;
                continue;
            }
            rep.checked_children++;
            if (c->ds < 2) {
                std::ostringstream os;
                os << "child with ds < 2 at depth " << r.depth << " edge " << r.edge;
                fail(os.str());
            }
        }

        if (r.kind == BranchKind::A) {
            for (const ChildDelta* c : {&c1, &c2})
                if (!c->leaf && (c->ds < 3 || c->df < 4)) {
                    std::ostringstream os;
                    os << "A-branch child (ds,df)=(" << c->ds << "," << c->df << ") at depth "
                       << r.depth;
                    fail(os.str());
                }
        }
        if (r.kind == BranchKind::B) {
            for (const ChildDelta* c : {&c1, &c2})
                if (!c->leaf && c->ds < 3) {
                    std::ostringstream os;
                    os << "B-branch child ds=" << c->ds << " at depth " << r.depth;
                    fail(os.str());
                }
        }

        bool dominated = false;
        for (const Line& l : kLines) {
            if (l.needs_a && r.kind != BranchKind::A) continue;
            if (l.needs_b && r.kind != BranchKind::B) continue;
            if (dominates_line(l, c1, c2)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            std::ostringstream os;
            os << "branch at depth " << r.depth << " kind " << static_cast<char>(r.kind)
               << " (ds1,df1,ds2,df2)=(" << c1.ds << "," << c1.df << "," << c2.ds << "," << c2.df
               << ") dominates no recurrence line";
            fail(os.str());
        }
    }
    return rep;
}

std::vector<TraceRow> load_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace " + path);
    std::vector<TraceRow> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        TraceRow r{};
        std::string prov, kind;
        ls >> r.depth >> prov >> kind >> r.edge >> r.s_before >> r.f_before >> r.s_child1 >>
            r.f_child1 >> r.s_child2 >> r.f_child2 >> r.a >> r.b >> r.d;
        r.kind = static_cast<BranchKind>(kind[0]);
        r.provenance = prov == "3a"    ? Provenance::Step3a
                       : prov == "3a'" ? Provenance::Step3aPrime
                       : prov == "3b"  ? Provenance::Step3b
                                       : Provenance::Step3c;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace ctsp
