#include "ctsp/bound.hpp"

#include <mpfr.h>

#include <sstream>

namespace ctsp {

namespace {

constexpr int kPrec = 192;  // fraction bits for the directed-rounding checks

// upper/lower bound of 2^(-q) for positive rational q
void pow2_neg(mpfr_t out, const mpq_class& q, mpfr_rnd_t rnd) {
    mpfr_t x;
    mpfr_init2(x, kPrec);
    // rounding of the exponent must move the same way as the result
    mpfr_set_q(x, q.get_mpq_t(), rnd == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU);
    mpfr_neg(x, x, MPFR_RNDN);
    mpfr_exp2(out, x, rnd);
    mpfr_clear(x);
}

std::string q_str(const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num() << "/" << q.get_den();
    return os.str();
}

}  // namespace

mpq_class BoundParams::objective() const {
    mpq_class obj = alpha + beta / 3 + gamma;
    obj.canonicalize();
    return obj;
}

mpq_class bound_R_exponent(int n, int s, int a, int b, int f, const BoundParams& p) {
    // alpha*s + beta*((n/4 - a) + (7/3)(n/7 - b) - n/4) + gamma*f simplifies
    // to alpha*s + beta*(n - 3a - 3b)/3 + gamma*f
    mpq_class e = p.alpha * s + p.beta * mpq_class(n - 3 * a - 3 * b, 3) + p.gamma * f;
    e.canonicalize();
    return e;
}

ConstraintReport verify_constraints(const BoundParams& p) {
    ConstraintReport rep;
    rep.objective = p.objective();

    auto linear = [&](const std::string& name, const mpq_class& lhs, const mpq_class& rhs) {
        mpq_class slack = lhs - rhs;
        slack.canonicalize();
        rep.checks.push_back({name, lhs >= rhs, "slack " + q_str(slack)});
    };
    linear("3a+b+4g >= 1", 3 * p.alpha + p.beta + 4 * p.gamma, 1);
    linear("3a+(7/3)b >= 1", 3 * p.alpha + mpq_class(7, 3) * p.beta, 1);
    linear("4a >= 1", 4 * p.alpha, 1);

    auto exponential = [&](const std::string& name, const mpq_class& q1, const mpq_class& q2) {
        mpfr_t hi1, hi2, sum;
        mpfr_inits2(kPrec, hi1, hi2, sum, (mpfr_ptr) nullptr);
        pow2_neg(hi1, q1, MPFR_RNDU);
        pow2_neg(hi2, q2, MPFR_RNDU);
        mpfr_add(sum, hi1, hi2, MPFR_RNDU);
        bool pass = mpfr_cmp_ui(sum, 1) <= 0;  // certified: upper bound <= 1
        std::ostringstream os;
        os << "upper bound " << mpfr_get_d(sum, MPFR_RNDU);
        rep.checks.push_back({name, pass, os.str()});
        mpfr_clears(hi1, hi2, sum, (mpfr_ptr) nullptr);
    };
    exponential("2^-(5a+2g)+2^-(2a+2g) <= 1", 5 * p.alpha + 2 * p.gamma,
                2 * p.alpha + 2 * p.gamma);
    exponential("2^-(4a+2g)+2^-(3a+2g) <= 1", 4 * p.alpha + 2 * p.gamma,
                3 * p.alpha + 2 * p.gamma);

    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

double pow2_rational(const mpq_class& q) {
    mpfr_t x, r;
    mpfr_inits2(kPrec, x, r, (mpfr_ptr) nullptr);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    mpfr_exp2(r, x, MPFR_RNDN);
    double d = mpfr_get_d(r, MPFR_RNDN);
    mpfr_clears(x, r, (mpfr_ptr) nullptr);
    return d;
}

bool dominated_by_bound(const mpz_class& t, const mpq_class& exponent) {
    if (t <= 0) return true;
    if (sgn(exponent) < 0) return t <= 0;  // R < 1 admits only T = 0

    // fast path: directed-rounding log2(T) against the rational exponent
    mpfr_t lg;
    mpfr_init2(lg, kPrec);
    mpfr_set_z(lg, t.get_mpz_t(), MPFR_RNDU);
    mpfr_log2(lg, lg, MPFR_RNDU);
    int cmp_hi = mpfr_cmp_q(lg, exponent.get_mpq_t());
    if (cmp_hi <= 0) {
        mpfr_clear(lg);
        return true;  // certified: log2 T <= exponent
    }
    mpfr_set_z(lg, t.get_mpz_t(), MPFR_RNDD);
    mpfr_log2(lg, lg, MPFR_RNDD);
    int cmp_lo = mpfr_cmp_q(lg, exponent.get_mpq_t());
    mpfr_clear(lg);
    if (cmp_lo > 0) return false;  // certified violation

    // straddling interval (ties like T = 2^k): exact T^den <= 2^num
    mpz_class num = exponent.get_num(), den = exponent.get_den();
    mpz_class lhs;
    mpz_pow_ui(lhs.get_mpz_t(), t.get_mpz_t(), den.get_ui());
    mpz_class rhs = 1;
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), num.get_ui());
    return lhs <= rhs;
}

std::vector<DominanceViolation> check_T_dominance(int n, const BoundParams& params) {
    std::vector<DominanceViolation> bad;
    RecurrenceTable table(n);
    table.eval();
    for (const auto& [st, val] : table.states()) {
        mpq_class e = bound_R_exponent(n, st.s, st.a, st.b, st.f, params);
        if (!dominated_by_bound(*val, e))
            bad.push_back({st, val->get_str()});
    }
    return bad;
}

}  // namespace ctsp
