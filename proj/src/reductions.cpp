#include "cecac/reductions.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <random>
#include <set>
#include <string>

#include "cecac/dsl.hpp"

namespace cecac {

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

int Graph::regular_degree() const {
    if (n == 0) return 0;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : edges) {
        deg[static_cast<std::size_t>(a)]++;
        deg[static_cast<std::size_t>(b)]++;
    }
    for (int d : deg)
        if (d != deg.front()) return -1;
    return deg.front();
}

Graph parse_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw MalformedInput("edge list: expected header \"n m\"");
    if (n < 0 || m < 0) throw MalformedInput("edge list: negative counts");
    Graph g;
    g.n = static_cast<int>(n);
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw MalformedInput("edge list: expected " + std::to_string(m) + " edges");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw MalformedInput("edge list: vertex out of range in edge " + std::to_string(i));
        if (u == v) throw MalformedInput("edge list: self-loop at vertex " + std::to_string(u));
        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            throw MalformedInput("edge list: duplicate edge " + std::to_string(lo) + "-" +
                                 std::to_string(hi));
    }
    g.edges.assign(seen.begin(), seen.end());
    return g;
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file: " + path);
    return parse_edge_list(in);
}

namespace {

Constraint implication(const Formula& lhs, const Formula& rhs) {
    Constraint c{lhs, rhs, ""};
    c.text = render(c);
    return c;
}

// Incident edge indices per vertex, ordered like the (sorted) edge list.
std::vector<std::vector<int>> incident_edges(const Graph& g) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.n));
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        inc[static_cast<std::size_t>(g.edges[j].first)].push_back(static_cast<int>(j));
        inc[static_cast<std::size_t>(g.edges[j].second)].push_back(static_cast<int>(j));
    }
    return inc;
}

std::string sup(const std::string& base, int h, const std::string& tag, int i) {
    return base + "^" + std::to_string(h) + "_" + tag + std::to_string(i);
}

Formula left_disjunction(const std::vector<Formula>& parts) {
    Formula f = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) f = Formula::disj(f, parts[i]);
    return f;
}

Formula left_conjunction(const std::vector<Formula>& parts) {
    Formula f = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) f = Formula::conj(f, parts[i]);
    return f;
}

}  // namespace

Instance clique_to_cecac_two_attrs(const Graph& g, int clique_size) {
    const int d = g.regular_degree();
    if (d < 0) throw NotRegular("clique reduction needs a regular graph");
    if (clique_size < 2) throw InconsistentParams("clique size must be at least 2");

    const long long kp = clique_size;
    Instance inst;
    inst.name = "clique-two-attrs-kp" + std::to_string(clique_size);
    inst.k = static_cast<int>(5 * kp * (kp - 1) / 2 + kp);
    inst.p = kp * (kp - 1) * (kp + 1) / 2 - kp;

    // Per edge j: x^1..x^4. Per vertex i: y^0..y^D and z^0..z^D.
    for (std::size_t j = 0; j < g.edges.size(); ++j)
        for (int t = 1; t <= 4; ++t)
            inst.attributes.push_back(sup("x", t, "e", static_cast<int>(j)));
    for (int i = 0; i < g.n; ++i) {
        for (int h = 0; h <= d; ++h) inst.attributes.push_back(sup("y", h, "v", i));
        for (int h = 0; h <= d; ++h) inst.attributes.push_back(sup("z", h, "v", i));
    }

    // Edge candidates: selecting one demands both of its incidence
    // candidates, which in turn demand the endpoint bookkeeping below.
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        Candidate c;
        c.id = "c_e" + std::to_string(j);
        c.attributes = {sup("x", 1, "e", static_cast<int>(j)),
                        sup("x", 2, "e", static_cast<int>(j))};
        c.profit = kp + 1;
        inst.candidates.push_back(std::move(c));
    }
    // Incidence candidates: the h-th incident edge of vertex i occupies slot
    // y^h_i; the lower endpoint of an edge carries x^3, the higher x^4.
    const std::vector<std::vector<int>> inc = incident_edges(g);
    for (int i = 0; i < g.n; ++i) {
        for (int h = 1; h <= d; ++h) {
            const int j = inc[static_cast<std::size_t>(i)][static_cast<std::size_t>(h - 1)];
            const int side = g.edges[static_cast<std::size_t>(j)].first == i ? 3 : 4;
            Candidate c;
            c.id = "c_v" + std::to_string(i) + "_h" + std::to_string(h);
            c.attributes = {sup("x", side, "e", j), sup("y", h, "v", i)};
            c.profit = 0;
            inst.candidates.push_back(std::move(c));
        }
    }
    // Relay candidates: owning any y^h_i forces z^h_i, whose owner raises
    // y^0_i, which forces z^0_i, owned by the profit -1 vertex candidate.
    for (int i = 0; i < g.n; ++i) {
        for (int h = 1; h <= d; ++h) {
            Candidate c;
            c.id = "d_v" + std::to_string(i) + "_h" + std::to_string(h);
            c.attributes = {sup("y", 0, "v", i), sup("z", h, "v", i)};
            c.profit = 0;
            inst.candidates.push_back(std::move(c));
        }
    }
    for (int i = 0; i < g.n; ++i) {
        Candidate c;
        c.id = "g_v" + std::to_string(i);
        c.attributes = {sup("z", 0, "v", i)};
        c.profit = -1;
        inst.candidates.push_back(std::move(c));
    }

    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const int je = static_cast<int>(j);
        inst.constraints.push_back(implication(Formula::literal(sup("x", 1, "e", je)),
                                               Formula::literal(sup("x", 3, "e", je))));
        inst.constraints.push_back(implication(Formula::literal(sup("x", 2, "e", je)),
                                               Formula::literal(sup("x", 4, "e", je))));
    }
    for (int i = 0; i < g.n; ++i)
        for (int h = 0; h <= d; ++h)
            inst.constraints.push_back(implication(Formula::literal(sup("y", h, "v", i)),
                                                   Formula::literal(sup("z", h, "v", i))));
    return inst;
}

Instance clique_to_cecac_single_attr(const Graph& g, int clique_size) {
    const int d = g.regular_degree();
    if (d < 0) throw NotRegular("clique reduction needs a regular graph");
    if (clique_size < 2) throw InconsistentParams("clique size must be at least 2");

    const long long kp = clique_size;
    Instance inst;
    inst.name = "clique-single-attr-kp" + std::to_string(clique_size);
    inst.k = static_cast<int>(3 * kp * (kp - 1) / 2 + kp);
    inst.p = kp * (kp - 1) / 2 - kp;

    for (std::size_t j = 0; j < g.edges.size(); ++j)
        inst.attributes.push_back("y_e" + std::to_string(j));
    for (int i = 0; i < g.n; ++i)
        for (int h = 0; h <= d; ++h) inst.attributes.push_back(sup("x", h, "v", i));

    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        Candidate c;
        c.id = "c_e" + std::to_string(j);
        c.attributes = {"y_e" + std::to_string(j)};
        c.profit = 1;
        inst.candidates.push_back(std::move(c));
    }
    for (int i = 0; i < g.n; ++i) {
        for (int h = 1; h <= d; ++h) {
            Candidate c;
            c.id = "c_v" + std::to_string(i) + "_h" + std::to_string(h);
            c.attributes = {sup("x", h, "v", i)};
            c.profit = 0;
            inst.candidates.push_back(std::move(c));
        }
    }
    for (int i = 0; i < g.n; ++i) {
        Candidate c;
        c.id = "c0_v" + std::to_string(i);
        c.attributes = {sup("x", 0, "v", i)};
        c.profit = -1;
        inst.candidates.push_back(std::move(c));
    }

    // Selecting an edge demands its two endpoint slots; owning any slot of a
    // vertex demands the profit -1 vertex candidate.
    const std::vector<std::vector<int>> inc = incident_edges(g);
    auto slot_of = [&inc](int vertex, int edge) {
        const auto& list = inc[static_cast<std::size_t>(vertex)];
        for (std::size_t h = 0; h < list.size(); ++h)
            if (list[h] == edge) return static_cast<int>(h + 1);
        return 0;  // unreachable for incident pairs
    };
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const auto& [u, w] = g.edges[j];
        const int je = static_cast<int>(j);
        inst.constraints.push_back(
            implication(Formula::literal("y_e" + std::to_string(j)),
                        Formula::literal(sup("x", slot_of(u, je), "v", u))));
        inst.constraints.push_back(
            implication(Formula::literal("y_e" + std::to_string(j)),
                        Formula::literal(sup("x", slot_of(w, je), "v", w))));
    }
    for (int i = 0; i < g.n; ++i) {
        if (d == 0) break;  // no slots, nothing forces the vertex candidate
        std::vector<Formula> slots;
        for (int h = 1; h <= d; ++h) slots.push_back(Formula::literal(sup("x", h, "v", i)));
        inst.constraints.push_back(
            implication(left_disjunction(slots), Formula::literal(sup("x", 0, "v", i))));
    }
    return inst;
}

Instance independent_set_to_cecac(const Graph& g, int set_size) {
    if (set_size < 0) throw InconsistentParams("set size must be nonnegative");
    Instance inst;
    inst.name = "independent-set-kp" + std::to_string(set_size);
    inst.k = set_size;
    inst.p = set_size;

    for (int i = 0; i < g.n; ++i) inst.attributes.push_back("a" + std::to_string(i + 1));
    for (int i = 0; i < g.n; ++i) {
        Candidate c;
        c.id = "v" + std::to_string(i + 1);
        c.attributes = {"a" + std::to_string(i + 1)};
        c.profit = 1;
        inst.candidates.push_back(std::move(c));
    }

    if (g.n > 0) {
        std::vector<Formula> vertex_lits;
        for (int i = 0; i < g.n; ++i)
            vertex_lits.push_back(Formula::literal("a" + std::to_string(i + 1)));
        const Formula lhs = left_disjunction(vertex_lits);
        if (g.edges.empty()) {
            // No conjunct to demand; a tautology keeps the shape intact.
            inst.constraints.push_back(implication(lhs, lhs));
        } else {
            std::vector<Formula> edge_terms;
            for (const auto& [u, w] : g.edges)
                edge_terms.push_back(Formula::disj(
                    Formula::negation(Formula::literal("a" + std::to_string(u + 1))),
                    Formula::negation(Formula::literal("a" + std::to_string(w + 1)))));
            inst.constraints.push_back(implication(lhs, left_conjunction(edge_terms)));
        }
    }
    return inst;
}

SplitResult split_constraint(const Constraint& r, SplitMode mode) {
    std::vector<std::string> lits;
    std::function<void(const Formula&)> collect = [&](const Formula& f) {
        switch (f.kind()) {
            case Formula::Kind::Literal:
                lits.push_back(f.attr());
                return;
            case Formula::Kind::Or:
                collect(f.left());
                collect(f.right());
                return;
            default:
                throw MalformedInput(
                    "split needs a disjunction of positive literals on the left");
        }
    };
    collect(r.lhs);
    if (lits.size() < 2) throw MalformedInput("split needs at least two disjuncts");
    const bool rhs_literal =
        r.rhs.kind() == Formula::Kind::Literal ||
        (r.rhs.kind() == Formula::Kind::Not && r.rhs.child().kind() == Formula::Kind::Literal);
    if (!rhs_literal) throw MalformedInput("split needs a single-literal right-hand side");

    std::set<std::string> taken(lits.begin(), lits.end());
    for (const std::string& a : r.rhs.attributes()) taken.insert(a);
    int counter = 1;
    auto fresh = [&taken, &counter]() {
        std::string name;
        do {
            name = "__aux_" + std::to_string(counter++);
        } while (taken.count(name));
        taken.insert(name);
        return name;
    };

    SplitResult out;
    std::vector<Formula> level;
    level.reserve(lits.size());
    for (const std::string& a : lits) level.push_back(Formula::literal(a));

    if (mode == SplitMode::Fanin3) {
        // Pair the disjuncts behind fresh attributes until two remain.
        while (level.size() > 2) {
            std::vector<Formula> next;
            std::size_t i = 0;
            for (; i + 1 < level.size(); i += 2) {
                const std::string f = fresh();
                out.fresh_attributes.push_back(f);
                out.constraints.push_back(
                    implication(Formula::disj(level[i], level[i + 1]), Formula::literal(f)));
                next.push_back(Formula::literal(f));
            }
            if (i < level.size()) next.push_back(level[i]);
            level = std::move(next);
        }
        const Formula lhs =
            level.size() == 2 ? Formula::disj(level[0], level[1]) : level.front();
        out.constraints.push_back(implication(lhs, r.rhs));
    } else {
        if (level.size() == 2) {
            // Two disjuncts split directly; no fresh attribute needed.
            out.constraints.push_back(implication(level[0], r.rhs));
            out.constraints.push_back(implication(level[1], r.rhs));
            return out;
        }
        // Cascade pairs into fresh attributes until a single literal remains.
        while (level.size() > 1) {
            std::vector<Formula> next;
            std::size_t i = 0;
            for (; i + 1 < level.size(); i += 2) {
                const std::string f = fresh();
                out.fresh_attributes.push_back(f);
                out.constraints.push_back(implication(level[i], Formula::literal(f)));
                out.constraints.push_back(implication(level[i + 1], Formula::literal(f)));
                next.push_back(Formula::literal(f));
            }
            if (i < level.size()) next.push_back(level[i]);
            level = std::move(next);
        }
        out.constraints.push_back(implication(level.front(), r.rhs));
    }
    return out;
}

Instance random_instance(const GeneratorParams& params) {
    if (params.m < 0 || params.num_attributes < 0 || params.num_constraints < 0 ||
        params.k < 0 || params.max_attrs_per_candidate < 0)
        throw InconsistentParams("generator counts must be nonnegative");
    if (params.k > params.m) throw InconsistentParams("k exceeds the candidate count");
    if (params.profit_lo > params.profit_hi) throw InconsistentParams("empty profit range");
    if (params.max_constraint_length == 1)
        throw InconsistentParams("constraints need at least two attributes");

    std::mt19937_64 rng(params.seed);
    // Explicit modulo keeps the stream identical across standard libraries.
    auto next = [&rng](int n) {
        return n <= 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    };
    auto attr_name = [](int idx) { return "a" + std::to_string(idx + 1); };

    Instance inst;
    inst.name = "random-" + std::to_string(params.seed);
    inst.k = params.k;
    for (int a = 0; a < params.num_attributes; ++a) inst.attributes.push_back(attr_name(a));

    // Constraints first, spending each attribute's occurrence budget. Every
    // constraint uses distinct attributes exactly once, so the budget and
    // the length cap are respected by construction.
    std::vector<int> budget(inst.attributes.size(),
                            params.max_attr_occurrence > 0 ? params.max_attr_occurrence
                                                           : 1 << 30);
    const int max_len = params.max_constraint_length > 0 ? params.max_constraint_length : 5;
    for (int r = 0; r < params.num_constraints; ++r) {
        std::vector<int> avail;
        for (std::size_t a = 0; a < budget.size(); ++a)
            if (budget[a] > 0) avail.push_back(static_cast<int>(a));
        if (static_cast<int>(avail.size()) < 2) break;  // budget exhausted
        const int cap = std::min(max_len, static_cast<int>(avail.size()));
        const int want = 2 + next(cap - 1);
        std::vector<int> chosen;
        for (int t = 0; t < want; ++t) {
            const int idx = next(static_cast<int>(avail.size()));
            chosen.push_back(avail[static_cast<std::size_t>(idx)]);
            avail.erase(avail.begin() + idx);
        }
        for (int a : chosen) budget[static_cast<std::size_t>(a)]--;

        std::function<Formula(int, int)> build = [&](int lo, int hi) -> Formula {
            if (hi - lo == 1) {
                Formula lit = Formula::literal(attr_name(chosen[static_cast<std::size_t>(lo)]));
                return next(3) == 0 ? Formula::negation(lit) : lit;
            }
            const int mid = lo + 1 + next(hi - lo - 1);
            Formula l = build(lo, mid);
            Formula rgt = build(mid, hi);
            Formula f = next(2) == 0 ? Formula::conj(l, rgt) : Formula::disj(l, rgt);
            return next(6) == 0 ? Formula::negation(f) : f;
        };
        const int lhs_n = 1 + next(want - 1);
        Formula lhs = build(0, lhs_n);
        Formula rhs = build(lhs_n, want);
        inst.constraints.push_back(implication(lhs, rhs));
    }

    for (int c = 0; c < params.m; ++c) {
        Candidate cand;
        cand.id = "c" + std::to_string(c + 1);
        int na = params.max_attrs_per_candidate > 0 ? next(params.max_attrs_per_candidate + 1)
                                                    : 0;
        na = std::min(na, params.num_attributes);
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < na) picked.insert(next(params.num_attributes));
        for (int a : picked) cand.attributes.push_back(attr_name(a));
        const std::uint64_t span =
            static_cast<std::uint64_t>(params.profit_hi - params.profit_lo + 1);
        cand.profit = params.profit_lo + static_cast<Profit>(rng() % span);
        inst.candidates.push_back(std::move(cand));
    }

    // p near the unconstrained top-k sum: tight enough that the constraints
    // decide feasibility, loose enough that both outcomes happen.
    std::vector<Profit> profits;
    profits.reserve(inst.candidates.size());
    for (const auto& c : inst.candidates) profits.push_back(c.profit);
    std::sort(profits.begin(), profits.end(), std::greater<>());
    Profit top = 0;
    for (int i = 0; i < std::min(params.k, params.m); ++i)
        top += profits[static_cast<std::size_t>(i)];
    const std::uint64_t width =
        static_cast<std::uint64_t>(params.profit_hi - params.profit_lo + 1);
    const Profit offset = static_cast<Profit>(rng() % (2 * width + 1));
    inst.p = top + static_cast<Profit>(width) / 2 - offset;

    return inst;
}

}  // namespace cecac
