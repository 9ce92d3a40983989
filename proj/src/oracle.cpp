#include "cecac/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace cecac {

long long committee_space(int m, int k, long long clamp) {
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    const long long max = std::numeric_limits<long long>::max();
    const long long over = clamp < max ? clamp + 1 : max;
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        const long long num = m - k + i;
        // result * num / i is always integral; guard the intermediate product.
        if (result > max / num) return over;
        result = result * num / i;
        if (result > clamp) return over;
    }
    return result;
}

namespace {

// Shared enumeration skeleton: visits every size-k subset of the candidates
// in lexicographic id order and reports (mask, profit) to the callback.
template <typename Visit>
void for_each_committee(const Instance& inst, const CompiledInstance& ci, Visit visit) {
    const int m = static_cast<int>(inst.candidates.size());
    const int k = inst.k;
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&inst](int a, int b) {
        return inst.candidates[static_cast<std::size_t>(a)].id <
               inst.candidates[static_cast<std::size_t>(b)].id;
    });
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(ci.words));
    while (true) {
        std::fill(mask.begin(), mask.end(), 0);
        Profit profit = 0;
        for (int pos : pick) {
            int cand = order[static_cast<std::size_t>(pos)];
            profit += inst.candidates[static_cast<std::size_t>(cand)].profit;
            const auto& cm = ci.cand_mask[static_cast<std::size_t>(cand)];
            for (std::size_t w = 0; w < mask.size(); ++w) mask[w] |= cm[w];
        }
        visit(pick, order, mask, profit);
        // Next combination.
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void ensure_budget(const Instance& inst, const OracleOptions& opts) {
    long long space =
        committee_space(static_cast<int>(inst.candidates.size()), inst.k, opts.budget);
    if (space > opts.budget)
        throw BudgetExceeded("enumeration budget exceeded: C(" +
                             std::to_string(inst.candidates.size()) + ", " +
                             std::to_string(inst.k) + ") > " + std::to_string(opts.budget));
}

}  // namespace

Solution solve_exhaustive(const Instance& inst, const OracleOptions& opts) {
    ensure_budget(inst, opts);
    CompiledInstance ci = compile_instance(inst);
    Profit best = kNegInf;
    std::vector<int> best_committee;
    for_each_committee(inst, ci,
                       [&](const std::vector<int>& pick, const std::vector<int>& order,
                           const std::vector<std::uint64_t>& mask, Profit profit) {
                           if (!ci.all_satisfied(mask)) return;
                           if (profit > best) {
                               best = profit;
                               best_committee.clear();
                               for (int pos : pick)
                                   best_committee.push_back(order[static_cast<std::size_t>(pos)]);
                           }
                       });
    Solution sol;
    sol.solver = solver_name(SolverKind::Oracle);
    if (best != kNegInf && best >= inst.p) {
        sol.feasible = true;
        sol.committee = committee_ids(inst, best_committee);
        sol.profit = best;
    }
    return sol;
}

FeasibleStats enumerate_feasible(const Instance& inst, const OracleOptions& opts) {
    ensure_budget(inst, opts);
    CompiledInstance ci = compile_instance(inst);
    FeasibleStats stats;
    for_each_committee(inst, ci,
                       [&](const std::vector<int>&, const std::vector<int>&,
                           const std::vector<std::uint64_t>& mask, Profit profit) {
                           if (!ci.all_satisfied(mask)) return;
                           stats.max_profit = std::max(stats.max_profit, profit);
                           ++stats.count;
                       });
    return stats;
}

}  // namespace cecac
