#ifndef CECAC_CHAIN_DP_HPP
#define CECAC_CHAIN_DP_HPP

#include "cecac/model.hpp"

namespace cecac {

// Connected component of simple constraints under shared attributes.
struct Cluster {
    std::vector<SimpleConstraint> constraints;
};

// Grouped by attribute-sharing; ordering inside a cluster and across
// clusters follows first appearance, so the result is deterministic.
std::vector<Cluster> cluster_constraints(const std::vector<SimpleConstraint>& simple);

// Maximal implication chain x1 -> x2 -> ... -> xt. A cycle of constraints is
// stored with the first literal repeated at the end, which makes its only
// consistent prefixes the all-fulfilled and all-unfulfilled ones.
struct ImplicationString {
    std::vector<Literal> literals;

    int length() const { return static_cast<int>(literals.size()); }
};

// Strings of one cluster plus their relations: vertices are merge groups
// (strings sharing a first-first or last-last endpoint attribute) and edges
// link a string whose last literal is the negation of another's first.
struct StringGraph {
    std::vector<ImplicationString> strings;
    std::vector<std::vector<int>> vertices;  // groups of string indices
    struct Edge {
        int from = 0;  // vertex indices
        int to = 0;
    };
    std::vector<Edge> edges;
};

StringGraph build_strings_graph(const Cluster& cluster);

// Table over (i, j): i committee members drawn from the string's attribute
// owners, first j literals unfulfilled and the rest fulfilled. n holds one
// top-profit owner per attribute that must be true, p the surplus owners.
struct PrefixCell {
    Profit v = kNegInf;
    std::vector<int> n;
    std::vector<int> p;
};

struct PrefixDpTable {
    int t = 0;
    std::vector<int> legal_j;
    std::vector<std::vector<PrefixCell>> rows;  // rows[idx][i], idx indexes legal_j

    const PrefixCell& at(int i, int j) const;
};

PrefixDpTable string_prefix_table(const Instance& inst, const ImplicationString& s, int k);

// Exact solver for single-attribute candidates whose constraints normalize
// to literal implications with every attribute occurring at most twice.
Solution solve_chain_dp(const Instance& inst);

}  // namespace cecac

#endif
