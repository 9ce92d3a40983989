#include "cecac/solve.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cecac/chain_dp.hpp"
#include "cecac/fpt.hpp"
#include "cecac/tree_dp.hpp"

namespace cecac {

SolverChoice solver_choice_from_name(const std::string& name) {
    if (name == "auto") return SolverChoice::Auto;
    if (name == "oracle") return SolverChoice::Oracle;
    if (name == "treedp") return SolverChoice::TreeDp;
    if (name == "fpt") return SolverChoice::Fpt;
    if (name == "chaindp") return SolverChoice::ChainDp;
    throw MalformedInput("unknown solver \"" + name + "\"");
}

OracleOptions oracle_options_from_env() {
    OracleOptions opts;
    if (const char* raw = std::getenv("CECAC_ENUM_BUDGET")) {
        char* end = nullptr;
        const long long value = std::strtoll(raw, &end, 10);
        if (end == raw || *end != '\0' || value <= 0)
            throw MalformedInput("CECAC_ENUM_BUDGET must be a positive integer");
        opts.budget = value;
    }
    return opts;
}

namespace {

Solution run(const Instance& inst, SolverChoice choice) {
    switch (choice) {
        case SolverChoice::Oracle:
            return solve_exhaustive(inst, oracle_options_from_env());
        case SolverChoice::TreeDp:
            return solve_tree_dp(inst);
        case SolverChoice::Fpt:
            return solve_fpt(inst);
        case SolverChoice::ChainDp:
            return solve_chain_dp(inst);
        default:
            break;
    }
    try {
        return solve_tree_dp(inst);
    } catch (const NotApplicable&) {
    }
    try {
        return solve_chain_dp(inst);
    } catch (const NotApplicable&) {
    }
    try {
        return solve_fpt(inst);
    } catch (const NotApplicable&) {
    }
    return solve_exhaustive(inst, oracle_options_from_env());
}

}  // namespace

Solution solve(const Instance& inst, SolverChoice choice) {
    Solution sol = run(inst, choice);
    if (sol.feasible) {
        const CheckResult check = check_solution(inst, sol.committee.value());
        if (!check.ok() || check.profit != sol.profit.value())
            throw std::logic_error("solver " + sol.solver +
                                   " produced an invalid solution for " + inst.name);
    }
    return sol;
}

}  // namespace cecac
