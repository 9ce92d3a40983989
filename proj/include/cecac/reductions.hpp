#ifndef CECAC_REDUCTIONS_HPP
#define CECAC_REDUCTIONS_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>

#include "cecac/model.hpp"

namespace cecac {

// Simple undirected graph on vertices 0..n-1. Edges are normalized to
// u < v, sorted, without duplicates.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int degree(int v) const;
    // The degree shared by every vertex, or -1 when the graph is irregular.
    int regular_degree() const;
};

// Edge-list text: first line "n m", then m lines "u v", 0-indexed.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

// Committee instance feasible iff the regular graph g has a clique of size
// clique_size. Candidates carry up to two attributes and every attribute
// appears at most once in the constraints.
Instance clique_to_cecac_two_attrs(const Graph& g, int clique_size);

// Same decision with the bounds swapped: single-attribute candidates,
// attributes occurring up to twice, one long-lhs constraint per vertex.
Instance clique_to_cecac_single_attr(const Graph& g, int clique_size);

// Feasible iff g has an independent set of size set_size; one candidate per
// vertex and a single constraint.
Instance independent_set_to_cecac(const Graph& g, int set_size);

enum class SplitMode {
    Fanin3,  // results keep at most three attributes per constraint
    Fanin2,  // results shrink to literal -> literal
};

struct SplitResult {
    std::vector<Constraint> constraints;
    std::vector<std::string> fresh_attributes;
};

// Rewrites one wide constraint (lhs a disjunction of F >= 2 positive
// literals, rhs a single literal) into an equivalent family: a committee
// satisfying the original satisfies the family once each fresh attribute
// takes its forced value (the disjunction of its sources), and any
// committee satisfying the family satisfies the original.
SplitResult split_constraint(const Constraint& r, SplitMode mode);

struct GeneratorParams {
    int m = 8;               // candidates
    int num_attributes = 4;  // attribute vocabulary a1..a<n>
    int num_constraints = 2;
    int k = 3;
    int max_attrs_per_candidate = 1;
    int max_attr_occurrence = 0;    // 0 = unbounded
    int max_constraint_length = 0;  // 0 = unbounded, else >= 2
    Profit profit_lo = -4;
    Profit profit_hi = 9;
    std::uint64_t seed = 0;
};

// Deterministic for a fixed seed. The caps steer the output into the
// matching solver class; p lands near the unconstrained top-k profit sum so
// feasible and infeasible outcomes are both likely.
Instance random_instance(const GeneratorParams& params);

}  // namespace cecac

#endif
