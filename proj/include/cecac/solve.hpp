#pragma once

#include <string>

#include "cecac/model.hpp"
#include "cecac/oracle.hpp"

namespace cecac {

enum class SolverChoice { Auto, Oracle, TreeDp, Fpt, ChainDp };

// Maps "auto"/"oracle"/"treedp"/"fpt"/"chaindp" (throws MalformedInput).
SolverChoice solver_choice_from_name(const std::string& name);

// Oracle budget, honoring the CECAC_ENUM_BUDGET environment override.
OracleOptions oracle_options_from_env();

// Runs the requested solver. Auto tries the cheapest applicable one in the
// order tree dp, chain dp, fixed-parameter, exhaustive, falling through on
// NotApplicable. Explicit choices propagate NotApplicable to the caller.
// Feasible results are re-checked against the instance before returning.
Solution solve(const Instance& inst, SolverChoice choice = SolverChoice::Auto);

}  // namespace cecac
