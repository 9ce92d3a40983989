#ifndef CECAC_ORACLE_HPP
#define CECAC_ORACLE_HPP

#include "cecac/model.hpp"

namespace cecac {

struct OracleOptions {
    // Maximum number of size-k subsets the oracle may enumerate before
    // refusing with BudgetExceeded. The CLI overrides this from the
    // CECAC_ENUM_BUDGET environment variable.
    long long budget = 100'000'000;
};

// Reference solver: checks every size-k committee. Enumeration is
// lexicographic over sorted candidate ids; ties keep the first maximum, so
// the result is deterministic.
Solution solve_exhaustive(const Instance& inst, const OracleOptions& opts = {});

struct FeasibleStats {
    long long count = 0;          // size-k committees satisfying all constraints
    Profit max_profit = kNegInf;  // best profit among them
};

FeasibleStats enumerate_feasible(const Instance& inst, const OracleOptions& opts = {});

// C(m, k) clamped to budget + 1 when it overflows.
long long committee_space(int m, int k, long long clamp);

}  // namespace cecac

#endif
