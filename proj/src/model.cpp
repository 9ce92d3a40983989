#include "cecac/model.hpp"

#include <algorithm>
#include <set>

namespace cecac {

std::vector<Violation> validate_instance(const Instance& inst) {
    std::vector<Violation> out;
    std::set<std::string> attr_names;
    for (const auto& a : inst.attributes) {
        if (a.empty()) {
            out.push_back({ViolationCode::EmptyAttributeName, "empty attribute name"});
            continue;
        }
        if (!is_valid_attribute_name(a))
            out.push_back({ViolationCode::InvalidAttributeName, a});
        if (!attr_names.insert(a).second)
            out.push_back({ViolationCode::DuplicateAttribute, a});
    }
    std::set<std::string> ids;
    for (const auto& c : inst.candidates) {
        if (c.id.empty()) out.push_back({ViolationCode::EmptyCandidateId, "empty candidate id"});
        else if (!ids.insert(c.id).second)
            out.push_back({ViolationCode::DuplicateCandidateId, c.id});
        for (const auto& a : c.attributes)
            if (!attr_names.count(a))
                out.push_back({ViolationCode::UndeclaredAttribute, c.id + ": " + a});
    }
    for (const auto& r : inst.constraints) {
        for (const auto& side : {r.lhs, r.rhs})
            for (const auto& a : side.attributes())
                if (!attr_names.count(a))
                    out.push_back({ViolationCode::UndeclaredAttribute, r.text + ": " + a});
    }
    if (inst.k < 0) out.push_back({ViolationCode::KNegative, "k = " + std::to_string(inst.k)});
    else if (static_cast<std::size_t>(inst.k) > inst.candidates.size())
        out.push_back({ViolationCode::KTooLarge,
                       "k = " + std::to_string(inst.k) + " > m = " +
                           std::to_string(inst.candidates.size())});
    return out;
}

std::map<std::string, bool> induced_assignment(const Instance& inst,
                                               const std::vector<std::string>& committee) {
    std::map<std::string, bool> truth;
    for (const auto& a : inst.attributes) truth[a] = false;
    for (const auto& id : committee) {
        const Candidate* found = nullptr;
        for (const auto& c : inst.candidates)
            if (c.id == id) { found = &c; break; }
        if (!found) throw UnknownCandidate("unknown candidate id: " + id);
        for (const auto& a : found->attributes) truth[a] = true;
    }
    return truth;
}

CheckResult check_solution(const Instance& inst, const std::vector<std::string>& committee) {
    CheckResult res;
    res.size_ok = committee.size() == static_cast<std::size_t>(inst.k);
    auto truth = induced_assignment(inst, committee);
    auto lookup = [&truth](const std::string& a) {
        auto it = truth.find(a);
        return it != truth.end() && it->second;
    };
    res.constraints_ok = true;
    for (const auto& r : inst.constraints) {
        bool ok = !r.lhs.eval(lookup) || r.rhs.eval(lookup);
        if (!ok) {
            res.constraints_ok = false;
            res.violated.push_back(r.text);
        }
    }
    // Committee ids were resolved above; duplicates would double-count.
    std::set<std::string> seen;
    for (const auto& id : committee) {
        if (!seen.insert(id).second) res.size_ok = false;
        for (const auto& c : inst.candidates)
            if (c.id == id) { res.profit += c.profit; break; }
    }
    res.profit_ok = res.profit >= inst.p;
    return res;
}

ClassDescriptor describe_instance(const Instance& inst) {
    ClassDescriptor d;
    for (const auto& c : inst.candidates)
        d.max_attrs_per_candidate =
            std::max(d.max_attrs_per_candidate, static_cast<int>(c.attributes.size()));
    std::map<std::string, int> occurrences;
    for (const auto& r : inst.constraints) {
        std::set<std::string> distinct;
        for (const auto& side : {r.lhs, r.rhs}) {
            // Count every literal occurrence, including repeats within one
            // constraint; the length is over distinct attributes.
            std::vector<const Formula*> stack{&side};
            while (!stack.empty()) {
                const Formula* f = stack.back();
                stack.pop_back();
                switch (f->kind()) {
                    case Formula::Kind::Literal:
                        ++occurrences[f->attr()];
                        distinct.insert(f->attr());
                        break;
                    case Formula::Kind::Not:
                        stack.push_back(&f->child());
                        break;
                    default:
                        stack.push_back(&f->left());
                        stack.push_back(&f->right());
                }
            }
        }
        d.max_constraint_length = std::max(d.max_constraint_length,
                                           static_cast<int>(distinct.size()));
    }
    for (const auto& [attr, n] : occurrences)
        d.max_attr_occurrence = std::max(d.max_attr_occurrence, n);
    return d;
}

SolverKind classify_instance(const Instance& inst, int fpt_attr_cap) {
    ClassDescriptor d = describe_instance(inst);
    if (d.max_attrs_per_candidate <= 1 && d.max_attr_occurrence <= 1) return SolverKind::TreeDp;
    if (d.max_attrs_per_candidate <= 1 && d.max_attr_occurrence <= 2 &&
        d.max_constraint_length <= 2)
        return SolverKind::ChainDp;
    if (static_cast<int>(inst.attributes.size()) <= fpt_attr_cap) return SolverKind::Fpt;
    return SolverKind::Oracle;
}

namespace {

void compile_formula(const Formula& f, const std::map<std::string, int>& attr_index, bool negated,
                     std::vector<CompiledInstance::Op>& out) {
    switch (f.kind()) {
        case Formula::Kind::Literal:
            out.push_back({static_cast<std::int8_t>(negated ? 1 : 0),
                           attr_index.at(f.attr())});
            return;
        case Formula::Kind::Not:
            compile_formula(f.child(), attr_index, !negated, out);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            bool conj = (f.kind() == Formula::Kind::And) != negated;  // De Morgan
            compile_formula(f.left(), attr_index, negated, out);
            compile_formula(f.right(), attr_index, negated, out);
            out.push_back({static_cast<std::int8_t>(conj ? 2 : 3), -1});
            return;
        }
    }
}

}  // namespace

bool CompiledInstance::eval_constraint(std::size_t ci, const std::vector<std::uint64_t>& mask) const {
    // Small fixed stack; postfix depth is bounded by formula size, and the
    // vector fallback below never triggers at sane constraint sizes.
    bool fixed[64];
    std::vector<bool> heap;
    const auto& prog = programs[ci];
    bool use_heap = prog.size() > 64;
    if (use_heap) heap.resize(prog.size());
    int sp = 0;
    auto push = [&](bool v) { if (use_heap) heap[static_cast<std::size_t>(sp++)] = v; else fixed[sp++] = v; };
    auto pop = [&]() { --sp; return use_heap ? static_cast<bool>(heap[static_cast<std::size_t>(sp)]) : fixed[sp]; };
    for (const Op& op : prog) {
        switch (op.code) {
            case 0:
            case 1: {
                bool v = (mask[static_cast<std::size_t>(op.attr) >> 6] >>
                          (static_cast<std::size_t>(op.attr) & 63)) & 1u;
                push(op.code == 1 ? !v : v);
                break;
            }
            case 2: { bool b = pop(), a = pop(); push(a && b); break; }
            default: { bool b = pop(), a = pop(); push(a || b); break; }
        }
    }
    return pop();
}

bool CompiledInstance::all_satisfied(const std::vector<std::uint64_t>& mask) const {
    for (std::size_t i = 0; i < programs.size(); ++i)
        if (!eval_constraint(i, mask)) return false;
    return true;
}

CompiledInstance compile_instance(const Instance& inst) {
    CompiledInstance c;
    c.inst = &inst;
    for (const auto& a : inst.attributes)
        c.attr_index.emplace(a, static_cast<int>(c.attr_index.size()));
    c.words = std::max(1, (static_cast<int>(inst.attributes.size()) + 63) / 64);
    c.cand_mask.reserve(inst.candidates.size());
    c.cand_attrs.reserve(inst.candidates.size());
    for (const auto& cand : inst.candidates) {
        std::vector<std::uint64_t> mask(static_cast<std::size_t>(c.words), 0);
        std::vector<std::int32_t> ids;
        for (const auto& a : cand.attributes) {
            int idx = c.attr_index.at(a);
            mask[static_cast<std::size_t>(idx) >> 6] |= std::uint64_t{1} << (idx & 63);
            ids.push_back(idx);
        }
        c.cand_mask.push_back(std::move(mask));
        c.cand_attrs.push_back(std::move(ids));
    }
    for (const auto& r : inst.constraints) {
        std::vector<CompiledInstance::Op> prog;
        compile_formula(r.lhs, c.attr_index, true, prog);   // ~lhs
        compile_formula(r.rhs, c.attr_index, false, prog);  // rhs
        prog.push_back({3, -1});                            // or
        c.programs.push_back(std::move(prog));
    }
    return c;
}

bool better_candidate(const Candidate& a, const Candidate& b) {
    if (a.profit != b.profit) return a.profit > b.profit;
    return a.id < b.id;
}

std::vector<std::string> committee_ids(const Instance& inst, std::vector<int> indices) {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(inst.candidates[static_cast<std::size_t>(i)].id);
    std::sort(out.begin(), out.end());
    return out;
}

Solution take_top_k(const Instance& inst, const std::vector<int>& pool, int k, SolverKind kind) {
    std::vector<int> sorted = pool;
    std::sort(sorted.begin(), sorted.end(), [&inst](int a, int b) {
        return better_candidate(inst.candidates[static_cast<std::size_t>(a)],
                                inst.candidates[static_cast<std::size_t>(b)]);
    });
    Solution sol;
    sol.solver = solver_name(kind);
    if (static_cast<int>(sorted.size()) < k) return sol;
    Profit total = 0;
    std::vector<int> picks(sorted.begin(), sorted.begin() + k);
    for (int c : picks) total += inst.candidates[static_cast<std::size_t>(c)].profit;
    if (total >= inst.p) {
        sol.feasible = true;
        sol.committee = committee_ids(inst, picks);
        sol.profit = total;
    }
    return sol;
}

std::vector<int> merge_profit_sorted(const Instance& inst, const std::vector<int>& a,
                                     const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
               [&inst](int x, int y) {
                   return better_candidate(inst.candidates[static_cast<std::size_t>(x)],
                                           inst.candidates[static_cast<std::size_t>(y)]);
               });
    return out;
}

Profit merged_top_sum(const Instance& inst, const std::vector<int>& a, const std::vector<int>& b,
                      int want) {
    if (want <= 0) return 0;
    if (static_cast<int>(a.size() + b.size()) < want) return kNegInf;
    Profit total = 0;
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (int taken = 0; taken < want; ++taken) {
        bool from_a;
        if (ia == a.size()) {
            from_a = false;
        } else if (ib == b.size()) {
            from_a = true;
        } else {
            from_a = better_candidate(inst.candidates[static_cast<std::size_t>(a[ia])],
                                      inst.candidates[static_cast<std::size_t>(b[ib])]);
        }
        int pick = from_a ? a[ia++] : b[ib++];
        total += inst.candidates[static_cast<std::size_t>(pick)].profit;
    }
    return total;
}

std::vector<int> merged_top_pick(const Instance& inst, const std::vector<int>& a,
                                 const std::vector<int>& b, int want) {
    std::vector<int> out;
    if (want <= 0) return out;
    out.reserve(static_cast<std::size_t>(want));
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (static_cast<int>(out.size()) < want && (ia < a.size() || ib < b.size())) {
        bool from_a;
        if (ia == a.size()) {
            from_a = false;
        } else if (ib == b.size()) {
            from_a = true;
        } else {
            from_a = better_candidate(inst.candidates[static_cast<std::size_t>(a[ia])],
                                      inst.candidates[static_cast<std::size_t>(b[ib])]);
        }
        out.push_back(from_a ? a[ia++] : b[ib++]);
    }
    return out;
}

}  // namespace cecac
