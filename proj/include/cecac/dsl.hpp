#ifndef CECAC_DSL_HPP
#define CECAC_DSL_HPP

#include <string>
#include <vector>

#include "cecac/formula.hpp"

namespace cecac {

// Grammar, loosest binding first:
//   constraint := expr '->' expr          (exactly one arrow, top level only)
//   expr       := term ('|' term)*
//   term       := factor ('&' factor)*
//   factor     := '~' factor | '(' expr ')' | IDENT
//   IDENT      := [A-Za-z_][A-Za-z0-9_^']*
Constraint parse_constraint(const std::string& text);
Formula parse_formula(const std::string& text);

// Canonical text: fully parenthesized binary ops, '~' prefix, single spaces
// around '&' and '|'. parse(render(f)) == f for every AST.
std::string render(const Formula& f);
std::string render(const Constraint& c);

bool is_valid_attribute_name(const std::string& name);

// Conjunction of the per-constraint NNF formulas as an explicit binary tree.
// Nested same-operator chains are flattened and rebuilt left-associated, so
// the shape is canonical. root == -1 encodes the empty constraint list
// (constant true, no tree).
struct FormulaTree {
    struct Node {
        int left = -1;
        int right = -1;
        bool is_and = false;   // internal: conjunction or disjunction
        bool is_leaf = false;
        std::string attr;      // leaf only
        bool negated = false;  // leaf only
    };
    std::vector<Node> nodes;
    int root = -1;

    bool is_true_sentinel() const { return root < 0; }
    // Truth of the subformula rooted at node under the given assignment.
    bool eval(int node, const std::function<bool(const std::string&)>& truth) const;
};

FormulaTree combine(const std::vector<Constraint>& constraints);

struct Literal {
    std::string attr;
    bool negated = false;

    bool operator==(const Literal& other) const {
        return attr == other.attr && negated == other.negated;
    }
};

// Implication between single literals; both sides are never the identical
// literal (x -> x is a tautology and gets dropped), but self-negation
// x -> ~x is legal.
struct SimpleConstraint {
    Literal lhs;
    Literal rhs;

    bool operator==(const SimpleConstraint& other) const {
        return lhs == other.lhs && rhs == other.rhs;
    }
};

// Splits lhs disjunctions and rhs conjunctions recursively until every piece
// is literal -> literal; drops tautologies and duplicates. Throws NotSimple
// when a constraint cannot be reduced (conjunctive lhs, disjunctive rhs).
std::vector<SimpleConstraint> normalize_simple(const std::vector<Constraint>& constraints);

}  // namespace cecac

#endif
