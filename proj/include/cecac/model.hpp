#ifndef CECAC_MODEL_HPP
#define CECAC_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cecac/dsl.hpp"
#include "cecac/formula.hpp"
#include "cecac/types.hpp"

namespace cecac {

struct Instance {
    std::string name;
    std::vector<std::string> attributes;
    std::vector<Candidate> candidates;
    std::vector<Constraint> constraints;
    int k = 0;
    Profit p = 0;
};

enum class ViolationCode {
    EmptyCandidateId,
    DuplicateCandidateId,
    EmptyAttributeName,
    InvalidAttributeName,
    DuplicateAttribute,
    UndeclaredAttribute,
    KNegative,
    KTooLarge,
};

struct Violation {
    ViolationCode code;
    std::string detail;
};

// Returns every violated structural invariant; empty means well-formed.
std::vector<Violation> validate_instance(const Instance& inst);

// Attribute truth induced by a committee: true iff some member owns it.
// Committee entries must be known candidate ids (throws UnknownCandidate).
std::map<std::string, bool> induced_assignment(const Instance& inst,
                                               const std::vector<std::string>& committee);

struct CheckResult {
    bool size_ok = false;
    bool constraints_ok = false;
    bool profit_ok = false;
    Profit profit = 0;
    std::vector<std::string> violated;  // constraint texts, instance order

    bool ok() const { return size_ok && constraints_ok && profit_ok; }
};

CheckResult check_solution(const Instance& inst, const std::vector<std::string>& committee);

ClassDescriptor describe_instance(const Instance& inst);

// Routing preference: tree-dp > chain-dp > fpt > oracle. fpt_attr_cap bounds
// the attribute count for the fpt recommendation.
SolverKind classify_instance(const Instance& inst, int fpt_attr_cap = 16);

// ---- internal helpers shared by the solvers ----

// Attribute names interned to indices (instance declaration order) and
// constraints compiled to postfix programs over those indices.
struct CompiledInstance {
    const Instance* inst = nullptr;
    std::map<std::string, int> attr_index;
    int words = 0;                                // mask words per assignment
    std::vector<std::vector<std::uint64_t>> cand_mask;
    std::vector<std::vector<std::int32_t>> cand_attrs;

    struct Op {
        std::int8_t code;  // 0 literal, 1 negated literal, 2 and, 3 or
        std::int32_t attr = -1;
    };
    std::vector<std::vector<Op>> programs;  // one per constraint, lhs -> rhs baked in

    bool eval_constraint(std::size_t ci, const std::vector<std::uint64_t>& mask) const;
    bool all_satisfied(const std::vector<std::uint64_t>& mask) const;
};

CompiledInstance compile_instance(const Instance& inst);

// (profit desc, id asc) candidate ordering used by every tie-break.
bool better_candidate(const Candidate& a, const Candidate& b);

// Best committee when no constraint binds: the k most profitable candidates
// from pool. Infeasible when the pool is short or the sum misses p.
Solution take_top_k(const Instance& inst, const std::vector<int>& pool, int k, SolverKind kind);

// The following operate on candidate-index vectors kept sorted by
// (profit desc, id asc); merged_top_* consume two such vectors.
std::vector<int> merge_profit_sorted(const Instance& inst, const std::vector<int>& a,
                                     const std::vector<int>& b);
// Sum of the best `want` profits of the merged pools; kNegInf when short.
Profit merged_top_sum(const Instance& inst, const std::vector<int>& a, const std::vector<int>& b,
                      int want);
std::vector<int> merged_top_pick(const Instance& inst, const std::vector<int>& a,
                                 const std::vector<int>& b, int want);

// Committee ids for a set of candidate indices, sorted by id.
std::vector<std::string> committee_ids(const Instance& inst, std::vector<int> indices);

}  // namespace cecac

#endif
