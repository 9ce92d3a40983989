#include "cecac/fpt.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace cecac {

std::vector<CandidateType> candidate_types(const Instance& inst) {
    std::map<std::vector<std::string>, std::vector<int>> groups;
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
        std::vector<std::string> attrs = inst.candidates[c].attributes;
        std::sort(attrs.begin(), attrs.end());
        attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
        groups[std::move(attrs)].push_back(static_cast<int>(c));
    }
    std::vector<CandidateType> out;
    out.reserve(groups.size());
    for (auto& [attrs, owners] : groups) {
        std::sort(owners.begin(), owners.end(), [&inst](int a, int b) {
            return better_candidate(inst.candidates[static_cast<std::size_t>(a)],
                                    inst.candidates[static_cast<std::size_t>(b)]);
        });
        out.push_back({attrs, std::move(owners)});
    }
    return out;
}

Solution solve_fpt(const Instance& inst, int type_cap) {
    std::vector<CandidateType> types = candidate_types(inst);
    const int t = static_cast<int>(types.size());
    if (t > type_cap)
        throw CapExceeded(std::to_string(t) + " candidate types exceed the cap of " +
                          std::to_string(type_cap));

    const CompiledInstance ci = compile_instance(inst);
    const int k = inst.k;
    auto better = [&inst](int a, int b) {
        return better_candidate(inst.candidates[static_cast<std::size_t>(a)],
                                inst.candidates[static_cast<std::size_t>(b)]);
    };

    Profit best = kNegInf;
    std::vector<int> best_committee;
    std::vector<std::uint64_t> truth(static_cast<std::size_t>(ci.words));
    const std::uint32_t limit = 1u << t;
    for (std::uint32_t sub = 0; sub < limit; ++sub) {
        const int chosen = std::popcount(sub);
        if (chosen > k) continue;
        std::fill(truth.begin(), truth.end(), 0);
        for (int ty = 0; ty < t; ++ty) {
            if (!(sub >> ty & 1u)) continue;
            const auto& mask =
                ci.cand_mask[static_cast<std::size_t>(types[static_cast<std::size_t>(ty)]
                                                           .owners.front())];
            for (std::size_t w = 0; w < truth.size(); ++w) truth[w] |= mask[w];
        }
        if (!ci.all_satisfied(truth)) continue;

        // One member per chosen type is mandatory; taking each type's best
        // owner first and filling the remaining seats with the best leftover
        // owners of the chosen types is optimal by a swap argument.
        Profit value = 0;
        std::vector<int> committee;
        std::vector<int> leftovers;
        for (int ty = 0; ty < t; ++ty) {
            if (!(sub >> ty & 1u)) continue;
            const auto& owners = types[static_cast<std::size_t>(ty)].owners;
            committee.push_back(owners.front());
            value += inst.candidates[static_cast<std::size_t>(owners.front())].profit;
            leftovers.insert(leftovers.end(), owners.begin() + 1, owners.end());
        }
        const int need = k - chosen;
        if (static_cast<int>(leftovers.size()) < need) continue;
        std::sort(leftovers.begin(), leftovers.end(), better);
        for (int i = 0; i < need; ++i) {
            committee.push_back(leftovers[static_cast<std::size_t>(i)]);
            value += inst.candidates[static_cast<std::size_t>(leftovers[static_cast<std::size_t>(i)])]
                         .profit;
        }
        if (value > best) {
            best = value;
            best_committee = std::move(committee);
        }
    }

    Solution sol;
    sol.solver = solver_name(SolverKind::Fpt);
    if (best != kNegInf && best >= inst.p) {
        sol.feasible = true;
        sol.committee = committee_ids(inst, best_committee);
        sol.profit = best;
    }
    return sol;
}

}  // namespace cecac
