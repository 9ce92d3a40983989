#ifndef CECAC_TREE_DP_HPP
#define CECAC_TREE_DP_HPP

#include "cecac/model.hpp"

namespace cecac {

// Rewrites shared attributes so every attribute has at most one owner: an
// attribute with u > 1 owners becomes u fresh attributes, one per owner, and
// every occurrence in a constraint becomes the disjunction of the fresh ones
// (negated occurrences pick up the negation; NNF happens later in combine).
// Requires every candidate to own at most one attribute.
Instance expand_attributes(const Instance& inst);

struct SplitCandidates {
    std::vector<int> c_plus;   // candidates whose attribute occurs in a constraint
    std::vector<int> c_minus;  // everyone else, free to fill seats
};

SplitCandidates split_candidates(const Instance& inst);

// Cell (i, j): best profit of choosing i candidates from C(q) satisfying the
// subformula q, j of them irreplaceable. n holds the irreplaceable members,
// p the replaceable ones; both sorted by (profit desc, id asc), and
// v == sum(n) + sum(p) whenever populated.
struct DpCell {
    Profit v = kNegInf;
    std::vector<int> n;
    std::vector<int> p;
    Profit sum_p = 0;
};

struct NodeTable {
    int max_i = 0;  // min(k, |C(q)|)
    std::vector<DpCell> cells;

    const DpCell& at(int i, int j) const {
        return cells[static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
                     static_cast<std::size_t>(j)];
    }
    DpCell& at(int i, int j) {
        return cells[static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
                     static_cast<std::size_t>(j)];
    }
};

struct TreeDpTables {
    FormulaTree tree;
    std::vector<NodeTable> tables;                // indexed like tree.nodes
    std::vector<std::vector<int>> node_cands;     // C(q), sorted (profit desc, id asc)

    const NodeTable& root() const { return tables[static_cast<std::size_t>(tree.root)]; }
};

// Bottom-up tables over the combined constraint tree. Preconditions: every
// attribute has at most one owner and occurs at most once among the leaves
// (guaranteed after expand_attributes on a tree-dp-class instance).
TreeDpTables build_tables(const Instance& inst, FormulaTree tree, const SplitCandidates& split,
                          int k);

Solution solve_tree_dp(const Instance& inst);

}  // namespace cecac

#endif
