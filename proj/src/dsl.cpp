#include "cecac/dsl.hpp"

#include <cctype>
#include <optional>

namespace cecac {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '\'';
}

struct Lexer {
    enum class Tok { Ident, Not, And, Or, LParen, RParen, Arrow, End };

    const std::string& src;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    std::size_t tok_pos = 0;

    explicit Lexer(const std::string& s) : src(s) { advance(); }

    void advance() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
        tok_pos = pos;
        if (pos >= src.size()) { tok = Tok::End; return; }
        char c = src[pos];
        switch (c) {
            case '~': tok = Tok::Not; ++pos; return;
            case '&': tok = Tok::And; ++pos; return;
            case '|': tok = Tok::Or; ++pos; return;
            case '(': tok = Tok::LParen; ++pos; return;
            case ')': tok = Tok::RParen; ++pos; return;
            case '-':
                if (pos + 1 < src.size() && src[pos + 1] == '>') { tok = Tok::Arrow; pos += 2; return; }
                throw ParseError("expected '->'", pos);
        }
        if (!is_ident_start(c)) throw ParseError(std::string("unexpected character '") + c + "'", pos);
        std::size_t start = pos;
        while (pos < src.size() && is_ident_char(src[pos])) ++pos;
        ident = src.substr(start, pos - start);
        tok = Tok::Ident;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& s) : lex(s) {}

    Formula expr() {
        Formula f = term();
        while (lex.tok == Lexer::Tok::Or) {
            lex.advance();
            f = Formula::disj(std::move(f), term());
        }
        return f;
    }

    Formula term() {
        Formula f = factor();
        while (lex.tok == Lexer::Tok::And) {
            lex.advance();
            f = Formula::conj(std::move(f), factor());
        }
        return f;
    }

    Formula factor() {
        switch (lex.tok) {
            case Lexer::Tok::Not: {
                lex.advance();
                return Formula::negation(factor());
            }
            case Lexer::Tok::LParen: {
                lex.advance();
                Formula f = expr();
                if (lex.tok != Lexer::Tok::RParen) throw ParseError("expected ')'", lex.tok_pos);
                lex.advance();
                return f;
            }
            case Lexer::Tok::Ident: {
                Formula f = Formula::literal(lex.ident);
                lex.advance();
                return f;
            }
            default:
                throw ParseError("expected expression", lex.tok_pos);
        }
    }
};

}  // namespace

Formula parse_formula(const std::string& text) {
    Parser p(text);
    Formula f = p.expr();
    if (p.lex.tok != Lexer::Tok::End) throw ParseError("unexpected trailing input", p.lex.tok_pos);
    return f;
}

Constraint parse_constraint(const std::string& text) {
    Parser p(text);
    Formula lhs = p.expr();
    if (p.lex.tok != Lexer::Tok::Arrow) throw ParseError("expected '->'", p.lex.tok_pos);
    p.lex.advance();
    Formula rhs = p.expr();
    if (p.lex.tok == Lexer::Tok::Arrow) throw ParseError("more than one '->'", p.lex.tok_pos);
    if (p.lex.tok != Lexer::Tok::End) throw ParseError("unexpected trailing input", p.lex.tok_pos);
    return Constraint{std::move(lhs), std::move(rhs), text};
}

bool is_valid_attribute_name(const std::string& name) {
    if (name.empty() || !is_ident_start(name[0])) return false;
    for (char c : name)
        if (!is_ident_char(c)) return false;
    return true;
}

std::string render(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Literal:
            return f.attr();
        case Formula::Kind::Not:
            return "~" + render(f.child());
        case Formula::Kind::And:
            return "(" + render(f.left()) + " & " + render(f.right()) + ")";
        case Formula::Kind::Or:
            return "(" + render(f.left()) + " | " + render(f.right()) + ")";
    }
    return {};
}

std::string render(const Constraint& c) { return render(c.lhs) + " -> " + render(c.rhs); }

namespace {

// Flattens same-operator chains and rebuilds them left-associated, bottom-up,
// so all conjunction/disjunction trees have one canonical shape.
Formula left_associate(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Literal:
            return f;
        case Formula::Kind::Not:
            return Formula::negation(left_associate(f.child()));
        default:
            break;
    }
    const Formula::Kind op = f.kind();
    std::vector<Formula> chain;
    // Iterative collect in left-to-right order.
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
        Formula cur = stack.back();
        stack.pop_back();
        if (cur.kind() == op) {
            stack.push_back(cur.right());
            stack.push_back(cur.left());
        } else {
            chain.push_back(left_associate(cur));
        }
    }
    Formula out = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i)
        out = op == Formula::Kind::And ? Formula::conj(std::move(out), chain[i])
                                       : Formula::disj(std::move(out), chain[i]);
    return out;
}

int emit(const Formula& f, FormulaTree& tree) {
    FormulaTree::Node node;
    switch (f.kind()) {
        case Formula::Kind::Literal:
            node.is_leaf = true;
            node.attr = f.attr();
            break;
        case Formula::Kind::Not:
            // NNF guarantees the child is a literal.
            node.is_leaf = true;
            node.attr = f.child().attr();
            node.negated = true;
            break;
        default:
            node.is_and = f.kind() == Formula::Kind::And;
            node.left = emit(f.left(), tree);
            node.right = emit(f.right(), tree);
    }
    tree.nodes.push_back(std::move(node));
    return static_cast<int>(tree.nodes.size()) - 1;
}

}  // namespace

bool FormulaTree::eval(int node, const std::function<bool(const std::string&)>& truth) const {
    const Node& n = nodes[static_cast<std::size_t>(node)];
    if (n.is_leaf) return n.negated ? !truth(n.attr) : truth(n.attr);
    bool l = eval(n.left, truth);
    bool r = eval(n.right, truth);
    return n.is_and ? (l && r) : (l || r);
}

FormulaTree combine(const std::vector<Constraint>& constraints) {
    FormulaTree tree;
    if (constraints.empty()) return tree;  // constant-true sentinel
    std::optional<Formula> all;
    for (const Constraint& c : constraints) {
        Formula f = to_nnf_formula(c);
        all = all ? Formula::conj(std::move(*all), std::move(f)) : std::move(f);
    }
    tree.root = emit(left_associate(*all), tree);
    return tree;
}

namespace {

std::optional<Literal> as_literal(const Formula& f) {
    if (f.kind() == Formula::Kind::Literal) return Literal{f.attr(), false};
    if (f.kind() == Formula::Kind::Not && f.child().kind() == Formula::Kind::Literal)
        return Literal{f.child().attr(), true};
    return std::nullopt;
}

void split_simple(const Formula& lhs, const Formula& rhs, const std::string& text,
                  std::vector<SimpleConstraint>& out) {
    if (lhs.kind() == Formula::Kind::Or) {
        split_simple(lhs.left(), rhs, text, out);
        split_simple(lhs.right(), rhs, text, out);
        return;
    }
    if (rhs.kind() == Formula::Kind::And) {
        split_simple(lhs, rhs.left(), text, out);
        split_simple(lhs, rhs.right(), text, out);
        return;
    }
    auto l = as_literal(lhs);
    auto r = as_literal(rhs);
    if (!l || !r) throw NotSimple("constraint is not reducible to literal implications: " + text);
    if (*l == *r) return;  // x -> x, vacuous
    out.push_back(SimpleConstraint{std::move(*l), std::move(*r)});
}

}  // namespace

std::vector<SimpleConstraint> normalize_simple(const std::vector<Constraint>& constraints) {
    std::vector<SimpleConstraint> out;
    for (const Constraint& c : constraints)
        split_simple(to_nnf(c.lhs), to_nnf(c.rhs), c.text, out);
    // Deduplicate, keeping first occurrences in order.
    std::vector<SimpleConstraint> unique;
    for (auto& sc : out) {
        bool seen = false;
        for (const auto& u : unique)
            if (u == sc) { seen = true; break; }
        if (!seen) unique.push_back(std::move(sc));
    }
    return unique;
}

}  // namespace cecac
