#ifndef CECAC_TYPES_HPP
#define CECAC_TYPES_HPP

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cecac {

// Profits are exact signed integers throughout; no floating point in any
// solver path.
using Profit = long long;

// Distinguished "no selection exists" sentinel. Never participates in
// arithmetic directly; use add_profit so it absorbs.
inline constexpr Profit kNegInf = std::numeric_limits<Profit>::min();

inline Profit add_profit(Profit a, Profit b) {
    if (a == kNegInf || b == kNegInf) return kNegInf;
    return a + b;
}

struct Candidate {
    std::string id;
    std::vector<std::string> attributes;  // sorted, unique
    Profit profit = 0;
};

class Formula;  // defined in formula.hpp

// Base for all library errors so the CLI can map them to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

struct NotApplicable : Error { using Error::Error; };
struct NotSimple : NotApplicable { using NotApplicable::NotApplicable; };
struct BudgetExceeded : NotApplicable { using NotApplicable::NotApplicable; };
struct CapExceeded : NotApplicable { using NotApplicable::NotApplicable; };
struct DegreeViolation : NotApplicable { using NotApplicable::NotApplicable; };
struct NotRegular : Error { using Error::Error; };
struct MalformedInput : Error { using Error::Error; };
struct InconsistentParams : Error { using Error::Error; };
struct UnknownCandidate : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

enum class SolverKind { Oracle, TreeDp, Fpt, ChainDp };

const char* solver_name(SolverKind kind);  // "oracle", "treedp", ...

struct Solution {
    bool feasible = false;
    std::optional<std::vector<std::string>> committee;  // sorted by id, present iff feasible
    std::optional<Profit> profit;                       // present iff feasible
    std::string solver;
};

struct ClassDescriptor {
    int max_attrs_per_candidate = 0;
    int max_attr_occurrence = 0;   // occurrences of a or ~a across all constraints
    int max_constraint_length = 0; // distinct attributes in one constraint
};

}  // namespace cecac

#endif
