#include "ctsp/recurrence.hpp"

#include <cmath>
#include <stdexcept>

namespace ctsp {

namespace {

// per-child decrements (ds, da, db, df); one-slot lines double their child
struct Line {
    int ds1, da1, db1, df1;
    int ds2, da2, db2, df2;
    bool two_terms;
};
constexpr Line kLines[5] = {
    {3, 1, 0, 4, 0, 0, 0, 0, false},  // A
    {3, 0, 1, 0, 0, 0, 0, 0, false},  // B
    {5, 0, 0, 2, 2, 0, 0, 2, true},
    {4, 0, 0, 0, 0, 0, 0, 0, false},
    {4, 0, 0, 2, 3, 0, 0, 2, true},
};

}  // namespace

RecurrenceTable::RecurrenceTable(int n) : n_(n) {
    if (n < 1 || n > 200) throw std::invalid_argument("RecurrenceTable: n must be in 1..200");
    memo_.reserve(1024);
}

std::uint32_t RecurrenceTable::key(const RecurrenceState& st) const {
    // s, f in 0..255; a in 0..127; b in 0..63 (n <= 200 keeps all in range)
    return (static_cast<std::uint32_t>(st.s) << 24) | (static_cast<std::uint32_t>(st.a) << 17) |
           (static_cast<std::uint32_t>(st.b) << 11) | (static_cast<std::uint32_t>(st.f) << 3);
}

const mpz_class& RecurrenceTable::value(const RecurrenceState& st) {
    static const mpz_class kZero = 0;
    static const mpz_class kOne = 1;
    // impossible branches terminate with 0 and take priority
    if (st.s < 0 || st.f < 0) return kZero;
    if (3 * st.a + 7 * st.b > n_) return kZero;  // equivalent to 3x+7y < 3n/4
    if (st.s == 0) return kOne;

    std::uint32_t k = key(st);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;

    mpz_class child[5][2];
    bool applicable = false;
    for (int i = 0; i < 5; i++) {
        const Line& l = kLines[i];
        child[i][0] = value({st.s - l.ds1, st.a + l.da1, st.b + l.db1, st.f - l.df1});
        if (l.two_terms) {
            child[i][1] = value({st.s - l.ds2, st.a + l.da2, st.b + l.db2, st.f - l.df2});
            if (child[i][0] > 0 && child[i][1] > 0) applicable = true;
        } else {
            if (child[i][0] > 0) applicable = true;
        }
    }
    mpz_class result;
    if (!applicable) {
        result = 1;  // no branch applies: the algorithm bottoms out here
    } else {
        for (int i = 0; i < 5; i++) {
            mpz_class line_value =
                kLines[i].two_terms ? mpz_class(child[i][0] + child[i][1]) : mpz_class(2 * child[i][0]);
            if (line_value > result) result = line_value;
        }
    }
    auto [pos, inserted] = memo_.emplace(k, std::move(result));
    return pos->second;
}

const mpz_class& RecurrenceTable::eval() { return value({n_, 0, 0, n_}); }

std::vector<std::pair<RecurrenceState, const mpz_class*>> RecurrenceTable::states() const {
    std::vector<std::pair<RecurrenceState, const mpz_class*>> out;
    out.reserve(memo_.size());
    for (const auto& [k, v] : memo_) {
        RecurrenceState st;
        st.s = static_cast<int>(k >> 24);
        st.a = static_cast<int>((k >> 17) & 0x7f);
        st.b = static_cast<int>((k >> 11) & 0x3f);
        st.f = static_cast<int>((k >> 3) & 0xff);
        out.push_back({st, &v});
    }
    return out;
}

double log2_mpz(const mpz_class& v) {
    if (v <= 1) return 0.0;
    signed long exp;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
}

EvalResult eval_T(int n) {
    RecurrenceTable table(n);
    EvalResult r;
    r.value = table.eval();
    r.log2_value = log2_mpz(r.value);
    return r;
}

namespace {

mpz_class naive(int n, int s, int a, int b, int f) {
    if (s < 0 || f < 0) return 0;
    if (3 * a + 7 * b > n) return 0;
    if (s == 0) return 1;
    mpz_class child[5][2];
    bool applicable = false;
    for (int i = 0; i < 5; i++) {
        const Line& l = kLines[i];
        child[i][0] = naive(n, s - l.ds1, a + l.da1, b + l.db1, f - l.df1);
        if (l.two_terms) {
            child[i][1] = naive(n, s - l.ds2, a + l.da2, b + l.db2, f - l.df2);
            if (child[i][0] > 0 && child[i][1] > 0) applicable = true;
        } else if (child[i][0] > 0) {
            applicable = true;
        }
    }
    if (!applicable) return 1;
    mpz_class best = 0;
    for (int i = 0; i < 5; i++) {
        mpz_class v = kLines[i].two_terms ? mpz_class(child[i][0] + child[i][1])
                                          : mpz_class(2 * child[i][0]);
        if (v > best) best = v;
    }
    return best;
}

}  // namespace

mpz_class eval_T_naive(int n) {
    if (n > 20) throw std::invalid_argument("eval_T_naive: n > 20");
    return naive(n, n, 0, 0, n);
}

}  // namespace ctsp
