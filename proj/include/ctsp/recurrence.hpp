#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ctsp {

// State of the leaf-count recurrence in the integer reparameterization
// a = n/4 - x, b = n/7 - y: memo key is (s, a, b, f) for fixed n.
struct RecurrenceState {
    int s, a, b, f;
};

class RecurrenceTable {
public:
    explicit RecurrenceTable(int n);

    // value at the start state (s=n, a=0, b=0, f=n)
    const mpz_class& eval();
    const mpz_class& value(const RecurrenceState& st);

    int n() const { return n_; }
    // every memoized state with its value (reached from the start state)
    std::vector<std::pair<RecurrenceState, const mpz_class*>> states() const;

private:
    std::uint32_t key(const RecurrenceState& st) const;
    int n_;
    std::unordered_map<std::uint32_t, mpz_class> memo_;
};

struct EvalResult {
    mpz_class value;
    double log2_value;  // log2 of value; 0 for value <= 1
};

// T at the start state for 1 <= n <= 200, with its log2.
EvalResult eval_T(int n);

// Reference evaluator without memoization; testing only, n <= 20.
mpz_class eval_T_naive(int n);

double log2_mpz(const mpz_class& v);

}  // namespace ctsp
