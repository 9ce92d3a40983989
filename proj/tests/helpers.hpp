#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cecac/dsl.hpp"
#include "cecac/model.hpp"
#include "cecac/reductions.hpp"

namespace testutil {

// Candidates written as "id:profit:a1,a2" ("c4:4:" owns nothing).
inline cecac::Instance make_instance(const std::vector<std::string>& attrs,
                                     const std::vector<std::string>& cands,
                                     const std::vector<std::string>& constraints, int k,
                                     cecac::Profit p) {
    cecac::Instance inst;
    inst.name = "test";
    inst.attributes = attrs;
    for (const std::string& spec : cands) {
        const std::size_t c1 = spec.find(':');
        const std::size_t c2 = spec.find(':', c1 + 1);
        cecac::Candidate cand;
        cand.id = spec.substr(0, c1);
        cand.profit = std::stoll(spec.substr(c1 + 1, c2 - c1 - 1));
        std::stringstream rest(spec.substr(c2 + 1));
        std::string attr;
        while (std::getline(rest, attr, ','))
            if (!attr.empty()) cand.attributes.push_back(attr);
        inst.candidates.push_back(std::move(cand));
    }
    for (const std::string& text : constraints)
        inst.constraints.push_back(cecac::parse_constraint(text));
    inst.k = k;
    inst.p = p;
    return inst;
}

inline cecac::Instance e1() {
    return make_instance({"a1", "a2", "a3"}, {"c1:3:a1", "c2:2:a2", "c3:5:a3", "c4:4:"},
                         {"a1 -> a2", "a3 -> ~a2"}, 2, 8);
}

inline cecac::Instance e2() {
    return make_instance({"a1", "a2", "a3"}, {"c1:3:a1", "c2:2:a2", "c3:5:a3", "c4:4:"},
                         {"a1 -> a2"}, 2, 8);
}

inline cecac::Graph cycle_graph(int n) {
    cecac::Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        g.edges.push_back({std::min(i, j), std::max(i, j)});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline cecac::Graph path_graph(int n) {
    cecac::Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
    return g;
}

inline cecac::Graph complete_graph(int n) {
    cecac::Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j});
    return g;
}

// Outer 5-cycle, spokes, inner pentagram: the smallest 3-regular graph with
// neither 3-cliques nor much symmetry breaking, handy as a negative case.
inline cecac::Graph petersen_graph() {
    cecac::Graph g;
    g.n = 10;
    auto add = [&g](int u, int v) { g.edges.push_back({std::min(u, v), std::max(u, v)}); };
    for (int i = 0; i < 5; ++i) add(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) add(i, i + 5);
    for (int i = 0; i < 5; ++i) add(5 + i, 5 + (i + 2) % 5);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline bool adjacent(const cecac::Graph& g, int u, int v) {
    const auto e = std::make_pair(std::min(u, v), std::max(u, v));
    return std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end();
}

inline bool has_clique(const cecac::Graph& g, int size) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(pick.size()) == size) return true;
        for (int v = start; v < g.n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (!adjacent(g, u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return size == 0 || rec(rec, 0);
}

inline bool has_independent_set(const cecac::Graph& g, int size) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(pick.size()) == size) return true;
        for (int v = start; v < g.n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (adjacent(g, u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return size == 0 || rec(rec, 0);
}

// Uniform random AST over attributes a1..a<num_attrs>; leaves at depth 0.
inline cecac::Formula random_formula(std::mt19937_64& rng, int depth, int num_attrs) {
    auto next = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    if (depth == 0 || next(4) == 0) {
        cecac::Formula lit =
            cecac::Formula::literal("a" + std::to_string(next(num_attrs) + 1));
        return next(3) == 0 ? cecac::Formula::negation(lit) : lit;
    }
    if (next(5) == 0) return cecac::Formula::negation(random_formula(rng, depth - 1, num_attrs));
    cecac::Formula l = random_formula(rng, depth - 1, num_attrs);
    cecac::Formula r = random_formula(rng, depth - 1, num_attrs);
    return next(2) == 0 ? cecac::Formula::conj(l, r) : cecac::Formula::disj(l, r);
}

}  // namespace testutil
