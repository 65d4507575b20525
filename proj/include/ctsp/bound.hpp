#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ctsp/recurrence.hpp"

namespace ctsp {

// Exact rational parameters of the bound function
// R(n,s,a,b,f) = 2^(alpha*s + beta*(n/3 - a - b) + gamma*f).
struct BoundParams {
    mpq_class alpha;
    mpq_class beta;
    mpq_class gamma;

    static BoundParams paper_constants() {
        return {mpq_class(157, 531), mpq_class(20, 413), mpq_class(20, 1239)};
    }
    // alpha + beta/3 + gamma; equals 1219/3717 for the paper constants
    mpq_class objective() const;
};

// Exponent of R as an exact rational: alpha*s + beta*(n - 3a - 3b)/3 + gamma*f.
mpq_class bound_R_exponent(int n, int s, int a, int b, int f, const BoundParams& p);

struct ConstraintCheck {
    std::string name;
    bool pass;
    // linear constraints: exact slack lhs - rhs as a rational string;
    // exponential constraints: certified upper bound of the left side
    std::string detail;
};

struct ConstraintReport {
    bool pass = false;
    mpq_class objective;
    std::vector<ConstraintCheck> checks;
};

// The five feasibility constraints; linear parts exactly in rationals, the
// two exponential parts with outward-rounded 192-bit evaluation so that
// pass implies truth.
ConstraintReport verify_constraints(const BoundParams& params);

// 2^q as a double, correctly computed at high precision (for reporting).
double pow2_rational(const mpq_class& q);

// Decides T <= 2^exponent exactly: directed-rounding comparison first, exact
// big-integer power comparison when the rounding interval straddles.
bool dominated_by_bound(const mpz_class& t, const mpq_class& exponent);

struct DominanceViolation {
    RecurrenceState state;
    std::string t_value;
};

// Checks T(state) <= R(state) over every memoized state of eval_T(n).
std::vector<DominanceViolation> check_T_dominance(int n, const BoundParams& params);

}  // namespace ctsp
