#include "cecac/tree_dp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace cecac {

namespace {

std::string fresh_name(const std::string& base, int index, std::set<std::string>& taken) {
    std::string name = base + "__" + std::to_string(index);
    while (taken.count(name)) name += "_";
    taken.insert(name);
    return name;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& repl) {
    switch (f.kind()) {
        case Formula::Kind::Literal: {
            auto it = repl.find(f.attr());
            return it == repl.end() ? f : it->second;
        }
        case Formula::Kind::Not:
            return Formula::negation(substitute(f.child(), repl));
        case Formula::Kind::And:
            return Formula::conj(substitute(f.left(), repl), substitute(f.right(), repl));
        case Formula::Kind::Or:
            return Formula::disj(substitute(f.left(), repl), substitute(f.right(), repl));
    }
    return f;
}

}  // namespace

Instance expand_attributes(const Instance& inst) {
    for (const auto& c : inst.candidates)
        if (c.attributes.size() > 1)
            throw NotApplicable("expand_attributes requires single-attribute candidates");

    std::map<std::string, std::vector<std::size_t>> owners;  // attr -> candidate positions
    for (std::size_t i = 0; i < inst.candidates.size(); ++i)
        for (const auto& a : inst.candidates[i].attributes) owners[a].push_back(i);

    std::set<std::string> taken(inst.attributes.begin(), inst.attributes.end());
    Instance out;
    out.name = inst.name;
    out.candidates = inst.candidates;
    out.k = inst.k;
    out.p = inst.p;

    std::map<std::string, Formula> repl;
    for (const auto& attr : inst.attributes) {
        auto it = owners.find(attr);
        if (it == owners.end() || it->second.size() <= 1) {
            out.attributes.push_back(attr);
            continue;
        }
        Formula disjunction = Formula::literal("");
        bool first = true;
        for (std::size_t idx = 0; idx < it->second.size(); ++idx) {
            std::string name = fresh_name(attr, static_cast<int>(idx) + 1, taken);
            out.attributes.push_back(name);
            out.candidates[it->second[idx]].attributes = {name};
            Formula lit = Formula::literal(name);
            disjunction = first ? lit : Formula::disj(std::move(disjunction), std::move(lit));
            first = false;
        }
        repl.emplace(attr, std::move(disjunction));
    }

    for (const auto& r : inst.constraints) {
        if (repl.empty()) {
            out.constraints.push_back(r);
            continue;
        }
        Constraint c{substitute(r.lhs, repl), substitute(r.rhs, repl), {}};
        c.text = render(c);
        out.constraints.push_back(std::move(c));
    }
    return out;
}

SplitCandidates split_candidates(const Instance& inst) {
    std::set<std::string> constrained;
    for (const auto& r : inst.constraints)
        for (const auto& side : {r.lhs, r.rhs})
            for (const auto& a : side.attributes()) constrained.insert(a);
    SplitCandidates split;
    for (std::size_t i = 0; i < inst.candidates.size(); ++i) {
        bool plus = false;
        for (const auto& a : inst.candidates[i].attributes)
            if (constrained.count(a)) { plus = true; break; }
        (plus ? split.c_plus : split.c_minus).push_back(static_cast<int>(i));
    }
    return split;
}

namespace {

struct Builder {
    const Instance& inst;
    int k;
    TreeDpTables& out;

    bool better(int a, int b) const {
        return better_candidate(inst.candidates[static_cast<std::size_t>(a)],
                                inst.candidates[static_cast<std::size_t>(b)]);
    }

    Profit profit(int c) const { return inst.candidates[static_cast<std::size_t>(c)].profit; }

    std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) const {
        return merge_profit_sorted(inst, a, b);
    }

    Profit top_sum(const std::vector<int>& a, const std::vector<int>& b, int want) const {
        return merged_top_sum(inst, a, b, want);
    }

    std::vector<int> top_pick(const std::vector<int>& a, const std::vector<int>& b,
                              int want) const {
        return merged_top_pick(inst, a, b, want);
    }

    void build_leaf(int node_idx);
    void build_inner(int node_idx);
};

void Builder::build_leaf(int node_idx) {
    const auto& node = out.tree.nodes[static_cast<std::size_t>(node_idx)];
    auto& table = out.tables[static_cast<std::size_t>(node_idx)];
    const auto& cands = out.node_cands[static_cast<std::size_t>(node_idx)];
    table.max_i = std::min<int>(k, static_cast<int>(cands.size()));
    table.cells.assign(static_cast<std::size_t>(table.max_i + 1) *
                           (static_cast<std::size_t>(table.max_i) + 2) / 2,
                       DpCell{});
    if (node.negated) {
        // Satisfied exactly when the owner stays out.
        table.at(0, 0).v = 0;
    } else if (!cands.empty() && table.max_i >= 1) {
        DpCell& cell = table.at(1, 1);
        cell.v = profit(cands[0]);
        cell.n = {cands[0]};
    }
    // A positive literal nobody owns keeps every cell at -inf: unsatisfiable.
}

void Builder::build_inner(int node_idx) {
    const auto& node = out.tree.nodes[static_cast<std::size_t>(node_idx)];
    auto& table = out.tables[static_cast<std::size_t>(node_idx)];
    const auto& lt = out.tables[static_cast<std::size_t>(node.left)];
    const auto& rt = out.tables[static_cast<std::size_t>(node.right)];
    const auto& lc = out.node_cands[static_cast<std::size_t>(node.left)];
    const auto& rc = out.node_cands[static_cast<std::size_t>(node.right)];
    table.max_i = std::min<int>(k, static_cast<int>(lc.size() + rc.size()));
    table.cells.assign(static_cast<std::size_t>(table.max_i + 1) *
                           (static_cast<std::size_t>(table.max_i) + 2) / 2,
                       DpCell{});

    for (int i = 0; i <= table.max_i; ++i) {
        for (int j = 0; j <= i; ++j) {
            DpCell& cell = table.at(i, j);
            // Which child pair or fill realizes the max; fill==0 means both
            // children satisfied, 1/2 mean only left / only right.
            int best_fill = -1, best_r = 0, best_t = 0;

            // Both subformulas satisfied (the only option at an AND node).
            for (int r = std::max(0, i - rt.max_i); r <= std::min(i, lt.max_i); ++r) {
                int t_lo = std::max(0, j - (i - r));
                int t_hi = std::min(r, j);
                for (int t = t_lo; t <= t_hi; ++t) {
                    Profit v = add_profit(lt.at(r, t).v, rt.at(i - r, j - t).v);
                    if (v != kNegInf && v > cell.v) {
                        cell.v = v;
                        best_fill = 0;
                        best_r = r;
                        best_t = t;
                    }
                }
            }

            if (!node.is_and) {
                // Only one side satisfied; the other side's candidates are
                // free filler. Value is taken from the merged top picks so it
                // always matches the recorded n/p sets.
                for (int side = 1; side <= 2; ++side) {
                    const NodeTable& st = side == 1 ? lt : rt;
                    const std::vector<int>& fill = side == 1 ? rc : lc;
                    for (int r = j; r <= st.max_i; ++r) {
                        const DpCell& sc = st.at(r, j);
                        if (sc.v == kNegInf) continue;
                        Profit pad = top_sum(sc.p, fill, i - j);
                        if (pad == kNegInf) continue;
                        Profit v = add_profit(sc.v - sc.sum_p, pad);
                        if (v > cell.v) {
                            cell.v = v;
                            best_fill = side;
                            best_r = r;
                        }
                    }
                }
            }

            if (cell.v == kNegInf) continue;
            if (best_fill == 0) {
                const DpCell& a = lt.at(best_r, best_t);
                const DpCell& b = rt.at(i - best_r, j - best_t);
                cell.n = merge_sorted(a.n, b.n);
                cell.p = merge_sorted(a.p, b.p);
                cell.sum_p = a.sum_p + b.sum_p;
            } else {
                const DpCell& sc = (best_fill == 1 ? lt : rt).at(best_r, j);
                const std::vector<int>& fill = best_fill == 1 ? rc : lc;
                cell.n = sc.n;
                cell.p = top_pick(sc.p, fill, i - j);
                cell.sum_p = 0;
                for (int c : cell.p) cell.sum_p += profit(c);
            }
        }
    }
}

}  // namespace

TreeDpTables build_tables(const Instance& inst, FormulaTree tree, const SplitCandidates& split,
                          int k) {
    TreeDpTables out;
    out.tree = std::move(tree);
    if (out.tree.is_true_sentinel())
        throw NotApplicable("build_tables needs at least one constraint");

    // After expansion each attribute has a unique owner and a unique leaf.
    std::map<std::string, int> owner;
    for (int idx : split.c_plus) {
        const auto& c = inst.candidates[static_cast<std::size_t>(idx)];
        for (const auto& a : c.attributes) {
            auto [it, inserted] = owner.emplace(a, idx);
            if (!inserted) throw NotApplicable("attribute with multiple owners: " + a);
        }
    }
    std::set<std::string> leaf_attrs;
    for (const auto& n : out.tree.nodes)
        if (n.is_leaf && !leaf_attrs.insert(n.attr).second)
            throw NotApplicable("attribute occurs more than once in the constraints: " + n.attr);

    const std::size_t num_nodes = out.tree.nodes.size();
    out.tables.resize(num_nodes);
    out.node_cands.resize(num_nodes);

    Builder builder{inst, k, out};
    std::vector<char> used(inst.candidates.size(), 0);
    for (std::size_t q = 0; q < num_nodes; ++q) {
        const auto& node = out.tree.nodes[q];
        if (node.is_leaf) {
            auto it = owner.find(node.attr);
            if (it != owner.end()) out.node_cands[q] = {it->second};
            builder.build_leaf(static_cast<int>(q));
        } else {
            const auto& lc = out.node_cands[static_cast<std::size_t>(node.left)];
            const auto& rc = out.node_cands[static_cast<std::size_t>(node.right)];
            for (int c : rc) {
                // Sibling pools must be disjoint or the DP would double-count.
                assert(std::find(lc.begin(), lc.end(), c) == lc.end());
                (void)c;
            }
            out.node_cands[q] = builder.merge_sorted(lc, rc);
            builder.build_inner(static_cast<int>(q));
        }
        for (int c : out.node_cands[q]) {
            if (used[static_cast<std::size_t>(c)] && out.tree.nodes[q].is_leaf)
                throw NotApplicable("candidate reachable from two leaves");
            used[static_cast<std::size_t>(c)] = 1;
        }
    }
    return out;
}

Solution solve_tree_dp(const Instance& inst) {
    ClassDescriptor d = describe_instance(inst);
    if (d.max_attrs_per_candidate > 1 || d.max_attr_occurrence > 1)
        throw NotApplicable("tree-dp needs single-attribute candidates and single-occurrence attributes");

    Instance expanded = expand_attributes(inst);
    SplitCandidates split = split_candidates(expanded);

    if (expanded.constraints.empty()) {
        std::vector<int> all(expanded.candidates.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return take_top_k(expanded, all, expanded.k, SolverKind::TreeDp);
    }

    TreeDpTables tables =
        build_tables(expanded, combine(expanded.constraints), split, expanded.k);

    // Candidate pool for the replaceable seats, already profit-sorted.
    std::vector<int> minus = split.c_minus;
    std::sort(minus.begin(), minus.end(), [&expanded](int a, int b) {
        return better_candidate(expanded.candidates[static_cast<std::size_t>(a)],
                                expanded.candidates[static_cast<std::size_t>(b)]);
    });

    const NodeTable& root = tables.root();
    const int k = expanded.k;
    Profit best = kNegInf;
    std::vector<int> best_committee;

    Builder scan{expanded, k, tables};
    for (int i = 0; i <= root.max_i; ++i) {
        for (int j = 0; j <= i && j <= k; ++j) {
            const DpCell& cell = root.at(i, j);
            if (cell.v == kNegInf) continue;
            Profit pad = scan.top_sum(cell.p, minus, k - j);
            if (pad == kNegInf) continue;  // not enough candidates to fill
            Profit total = add_profit(cell.v - cell.sum_p, pad);
            if (total > best) {
                best = total;
                best_committee = cell.n;
                auto picks = scan.top_pick(cell.p, minus, k - j);
                best_committee.insert(best_committee.end(), picks.begin(), picks.end());
            }
        }
    }

    Solution sol;
    sol.solver = solver_name(SolverKind::TreeDp);
    if (best != kNegInf && best >= expanded.p) {
        sol.feasible = true;
        sol.committee = committee_ids(expanded, best_committee);
        sol.profit = best;
    }
    return sol;
}

}  // namespace cecac
