#ifndef CECAC_FORMULA_HPP
#define CECAC_FORMULA_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cecac/types.hpp"

namespace cecac {

// Immutable propositional formula over attribute names. Value type; copies
// share structure. Negation is unrestricted in general formulas and sits
// directly above literals after to_nnf.
class Formula {
public:
    enum class Kind { Literal, Not, And, Or };

    static Formula literal(std::string attr);
    static Formula negation(Formula f);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);

    Kind kind() const { return node_->kind; }
    const std::string& attr() const { return node_->attr; }  // Literal only
    const Formula& child() const { return node_->children[0]; }  // Not only
    const Formula& left() const { return node_->children[0]; }   // And/Or
    const Formula& right() const { return node_->children[1]; }  // And/Or

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    // Collects attribute names in first-occurrence order, no duplicates.
    std::vector<std::string> attributes() const;

    bool eval(const std::function<bool(const std::string&)>& truth) const;

private:
    struct Node {
        Kind kind;
        std::string attr;
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Constraint {
    Formula lhs;
    Formula rhs;
    std::string text;  // DSL source; canonical render if built programmatically
};

// Negation normal form of lhs -> rhs, i.e. ~lhs | rhs with negations pushed
// to literals and double negations removed.
Formula to_nnf_formula(const Constraint& c);
Formula to_nnf(const Formula& f);

}  // namespace cecac

#endif
