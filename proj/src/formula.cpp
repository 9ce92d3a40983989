#include "cecac/formula.hpp"

#include <utility>

namespace cecac {

const char* solver_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::Oracle: return "oracle";
        case SolverKind::TreeDp: return "treedp";
        case SolverKind::Fpt: return "fpt";
        case SolverKind::ChainDp: return "chaindp";
    }
    return "?";
}

Formula Formula::literal(std::string attr) {
    return Formula(std::make_shared<Node>(Node{Kind::Literal, std::move(attr), {}}));
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node>(Node{Kind::And, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<Node>(Node{Kind::Or, {}, {std::move(lhs), std::move(rhs)}}));
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind) return false;
    switch (node_->kind) {
        case Kind::Literal:
            return node_->attr == other.node_->attr;
        case Kind::Not:
            return child() == other.child();
        case Kind::And:
        case Kind::Or:
            return left() == other.left() && right() == other.right();
    }
    return false;
}

namespace {

void collect_attrs(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Literal:
            for (const auto& seen : out)
                if (seen == f.attr()) return;
            out.push_back(f.attr());
            return;
        case Formula::Kind::Not:
            collect_attrs(f.child(), out);
            return;
        default:
            collect_attrs(f.left(), out);
            collect_attrs(f.right(), out);
    }
}

}  // namespace

std::vector<std::string> Formula::attributes() const {
    std::vector<std::string> out;
    collect_attrs(*this, out);
    return out;
}

bool Formula::eval(const std::function<bool(const std::string&)>& truth) const {
    switch (kind()) {
        case Kind::Literal: return truth(attr());
        case Kind::Not: return !child().eval(truth);
        case Kind::And: return left().eval(truth) && right().eval(truth);
        case Kind::Or: return left().eval(truth) || right().eval(truth);
    }
    return false;
}

namespace {

Formula nnf_impl(const Formula& f, bool negated) {
    switch (f.kind()) {
        case Formula::Kind::Literal:
            return negated ? Formula::negation(f) : f;
        case Formula::Kind::Not:
            return nnf_impl(f.child(), !negated);
        case Formula::Kind::And:
            if (negated)
                return Formula::disj(nnf_impl(f.left(), true), nnf_impl(f.right(), true));
            return Formula::conj(nnf_impl(f.left(), false), nnf_impl(f.right(), false));
        case Formula::Kind::Or:
            if (negated)
                return Formula::conj(nnf_impl(f.left(), true), nnf_impl(f.right(), true));
            return Formula::disj(nnf_impl(f.left(), false), nnf_impl(f.right(), false));
    }
    return f;  // unreachable
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf_impl(f, false); }

Formula to_nnf_formula(const Constraint& c) {
    return Formula::disj(nnf_impl(c.lhs, true), nnf_impl(c.rhs, false));
}

}  // namespace cecac
