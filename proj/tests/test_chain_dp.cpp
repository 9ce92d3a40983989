#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <stdexcept>

#include "cecac/chain_dp.hpp"
#include "cecac/dsl.hpp"
#include "cecac/oracle.hpp"
#include "cecac/reductions.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cecac;
using testutil::make_instance;

namespace {

std::vector<SimpleConstraint> simple(const std::vector<std::string>& texts) {
    std::vector<Constraint> cs;
    for (const std::string& t : texts) cs.push_back(parse_constraint(t));
    return normalize_simple(cs);
}

}  // namespace

TEST_CASE("constraints cluster by shared attributes") {
    const auto clusters = cluster_constraints(simple({"a1 -> a2", "a3 -> ~a2", "a5 -> a6"}));
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].constraints.size() == 2);
    CHECK(clusters[1].constraints.size() == 1);
    CHECK(clusters[1].constraints[0].lhs.attr == "a5");
}

TEST_CASE("chained implications merge into one string") {
    const auto clusters = cluster_constraints(simple({"a1 -> a2", "a2 -> a3"}));
    REQUIRE(clusters.size() == 1);
    const StringGraph g = build_strings_graph(clusters[0]);
    REQUIRE(g.strings.size() == 1);
    REQUIRE(g.strings[0].length() == 3);
    CHECK(g.strings[0].literals[0] == Literal{"a1", false});
    CHECK(g.strings[0].literals[1] == Literal{"a2", false});
    CHECK(g.strings[0].literals[2] == Literal{"a3", false});
    CHECK(g.vertices == std::vector<std::vector<int>>{{0}});
    CHECK(g.edges.empty());
}

TEST_CASE("strings sharing an endpoint attribute merge into one vertex") {
    const auto clusters = cluster_constraints(simple({"a1 -> a2", "a3 -> ~a2"}));
    REQUIRE(clusters.size() == 1);
    const StringGraph g = build_strings_graph(clusters[0]);
    REQUIRE(g.strings.size() == 2);
    CHECK(g.vertices == std::vector<std::vector<int>>{{0, 1}});
    CHECK(g.edges.empty());
}

TEST_CASE("a last literal negating a first literal forms an edge") {
    const auto clusters = cluster_constraints(simple({"a1 -> x", "~x -> a2"}));
    REQUIRE(clusters.size() == 1);
    const StringGraph g = build_strings_graph(clusters[0]);
    REQUIRE(g.strings.size() == 2);
    REQUIRE(g.vertices.size() == 2);
    REQUIRE(g.edges.size() == 1);
    const auto& from = g.vertices[static_cast<std::size_t>(g.edges[0].from)];
    REQUIRE(from.size() == 1);
    CHECK(g.strings[static_cast<std::size_t>(from[0])].literals.back() ==
          Literal{"x", false});
}

TEST_CASE("a two cycle is stored with the wrap literal repeated") {
    const auto clusters = cluster_constraints(simple({"a1 -> a2", "a2 -> a1"}));
    const StringGraph g = build_strings_graph(clusters[0]);
    REQUIRE(g.strings.size() == 1);
    REQUIRE(g.strings[0].length() == 3);
    CHECK(g.strings[0].literals.front() == g.strings[0].literals.back());
    CHECK(g.vertices == std::vector<std::vector<int>>{{0}});
    CHECK(g.edges.empty());
}

TEST_CASE("prefix table of a positive implication") {
    const Instance inst =
        make_instance({"a1", "a2"}, {"c1:3:a1", "c2:2:a2"}, {"a1 -> a2"}, 2, 0);
    const auto clusters = cluster_constraints(simple({"a1 -> a2"}));
    const StringGraph g = build_strings_graph(clusters[0]);
    const PrefixDpTable table = string_prefix_table(inst, g.strings[0], inst.k);

    CHECK(table.t == 2);
    CHECK(table.legal_j == std::vector<int>{0, 1, 2});
    CHECK(table.at(2, 0).v == 5);  // both attrs true, both owners seated
    CHECK(table.at(1, 1).v == 2);  // a1 false, a2 true
    CHECK(table.at(0, 2).v == 0);  // everything false, nobody seated
    CHECK(table.at(1, 0).v == kNegInf);
    CHECK(table.at(2, 1).v == kNegInf);
    CHECK(table.at(0, 0).v == kNegInf);
}

TEST_CASE("prefix table of a negated implication") {
    const Instance inst =
        make_instance({"a1", "a2"}, {"c1:3:a1", "c2:2:a2"}, {"~a1 -> ~a2"}, 2, 0);
    const auto clusters = cluster_constraints(simple({"~a1 -> ~a2"}));
    const PrefixDpTable table =
        string_prefix_table(inst, build_strings_graph(clusters[0]).strings[0], inst.k);

    CHECK(table.at(0, 0).v == 0);  // both attrs false
    CHECK(table.at(1, 1).v == 3);  // a1 true, a2 false
    CHECK(table.at(2, 2).v == 5);  // both true
    CHECK(table.at(1, 0).v == kNegInf);
    CHECK(table.at(2, 0).v == kNegInf);
}

TEST_CASE("surplus owners of a true attribute pad the table") {
    const Instance inst = make_instance(
        {"a1", "a2"}, {"c1:3:a1", "c2:2:a2", "c3:1:a2"}, {"a1 -> a2"}, 3, 0);
    const auto clusters = cluster_constraints(simple({"a1 -> a2"}));
    const PrefixDpTable table =
        string_prefix_table(inst, build_strings_graph(clusters[0]).strings[0], inst.k);

    CHECK(table.at(2, 0).v == 5);  // one owner each
    CHECK(table.at(3, 0).v == 6);  // plus the surplus a2 owner
    CHECK(table.at(2, 1).v == 3);  // a2 true twice over, a1 false
}

TEST_CASE("self negation leaves a single consistent prefix") {
    const Instance inst = make_instance({"a1"}, {"c1:3:a1"}, {"a1 -> ~a1"}, 1, 0);
    const auto clusters = cluster_constraints(simple({"a1 -> ~a1"}));
    const PrefixDpTable table =
        string_prefix_table(inst, build_strings_graph(clusters[0]).strings[0], inst.k);

    CHECK(table.legal_j == std::vector<int>{1, 2});
    CHECK(table.at(0, 1).v == 0);        // a1 false satisfies both reads
    CHECK(table.at(0, 2).v == kNegInf);  // demands a1 true and false at once
    CHECK(table.at(1, 1).v == kNegInf);  // seating c1 makes a1 true
}

TEST_CASE("cycle tables only admit all or nothing prefixes") {
    const Instance inst =
        make_instance({"a1", "a2"}, {"c1:3:a1", "c2:2:a2"}, {"a1 -> a2", "a2 -> a1"}, 2, 0);
    const auto clusters = cluster_constraints(simple({"a1 -> a2", "a2 -> a1"}));
    const PrefixDpTable table =
        string_prefix_table(inst, build_strings_graph(clusters[0]).strings[0], inst.k);

    CHECK(table.legal_j == std::vector<int>{0, 3});
    CHECK(table.at(2, 0).v == 5);
    CHECK(table.at(0, 3).v == 0);
    CHECK(table.at(1, 0).v == kNegInf);
    CHECK_THROWS_AS(table.at(1, 1), std::out_of_range);
}

TEST_CASE("multi attribute candidates are out of class") {
    const Instance multi =
        make_instance({"a1", "a2"}, {"c1:1:a1,a2", "c2:1:a2"}, {"a1 -> a2"}, 1, 0);
    CHECK_THROWS_AS(solve_chain_dp(multi), NotApplicable);
}

TEST_CASE("non implications are out of class") {
    const Instance inst = make_instance({"a1", "a2", "a3"},
                                        {"c1:1:a1", "c2:1:a2", "c3:1:a3"},
                                        {"a1 & a2 -> a3"}, 1, 0);
    CHECK_THROWS_AS(solve_chain_dp(inst), NotApplicable);
}

TEST_CASE("four occurrences of one attribute are out of class") {
    const Instance inst = make_instance({"a1"}, {"c1:1:a1", "c2:1:"},
                                        {"a1 -> ~a1", "~a1 -> a1"}, 1, 0);
    CHECK_THROWS_AS(solve_chain_dp(inst), NotApplicable);
}

TEST_CASE("chain dp solves the two constraint example") {
    const Solution sol = solve_chain_dp(testutil::e1());
    REQUIRE(sol.feasible);
    CHECK(sol.profit.value() == 9);
    CHECK(sol.committee.value() == std::vector<std::string>{"c3", "c4"});
    CHECK(sol.solver == "chaindp");
}

TEST_CASE("an equivalence cycle seats both or neither") {
    const Instance inst =
        make_instance({"a1", "a2"}, {"c1:3:a1", "c2:2:a2"}, {"a1 -> a2", "a2 -> a1"}, 2, 5);
    const Solution both = solve_chain_dp(inst);
    REQUIRE(both.feasible);
    CHECK(both.profit.value() == 5);

    Instance one = inst;
    one.k = 1;
    one.p = 0;
    CHECK_FALSE(solve_chain_dp(one).feasible);
}

TEST_CASE("self negation forces the free filler") {
    const Instance inst =
        make_instance({"a1"}, {"c1:9:a1", "c4:4:"}, {"a1 -> ~a1"}, 1, 0);
    const Solution sol = solve_chain_dp(inst);
    REQUIRE(sol.feasible);
    CHECK(sol.committee.value() == std::vector<std::string>{"c4"});
    CHECK(sol.profit.value() == 4);
}

TEST_CASE("one lhs attribute can start two strings") {
    const Instance inst = make_instance(
        {"a", "b", "c"}, {"ca:5:a", "cb:2:b", "cc:1:c", "cd:3:"},
        {"a -> b", "a -> c"}, 2, 0);
    const Solution fast = solve_chain_dp(inst);
    const Solution slow = solve_exhaustive(inst);
    REQUIRE(fast.feasible == slow.feasible);
    CHECK(fast.profit.value() == slow.profit.value());
    // Seating ca would demand b and c too, overflowing k = 2.
    CHECK(fast.profit.value() == 5);
}

TEST_CASE("opposite polarity endpoints wrap into one string") {
    // ~b -> a chains into a -> b, leaving a single string ~b, a, b whose
    // endpoints clash unless exactly b, or both a and b, are true.
    const Instance inst = make_instance(
        {"a", "b"}, {"ca:3:a", "cb:2:b"}, {"a -> b", "~b -> a"}, 1, 0);
    const auto clusters = cluster_constraints(simple({"a -> b", "~b -> a"}));
    const StringGraph g = build_strings_graph(clusters[0]);
    REQUIRE(g.strings.size() == 1);
    REQUIRE(g.strings[0].length() == 3);
    CHECK(g.strings[0].literals[0] == Literal{"b", true});
    CHECK(g.strings[0].literals[2] == Literal{"b", false});

    const Solution fast = solve_chain_dp(inst);
    const Solution slow = solve_exhaustive(inst);
    REQUIRE(fast.feasible == slow.feasible);
    CHECK(fast.profit.value() == slow.profit.value());
    CHECK(fast.profit.value() == 2);
}

TEST_CASE("two strings can couple into an edge cycle") {
    const Instance inst = make_instance(
        {"a", "x"}, {"ca:3:a", "cx:2:x", "cf:1:"}, {"a -> x", "~x -> ~a"}, 2, 0);
    const auto clusters = cluster_constraints(simple({"a -> x", "~x -> ~a"}));
    const StringGraph g = build_strings_graph(clusters[0]);
    REQUIRE(g.strings.size() == 2);
    REQUIRE(g.vertices.size() == 2);
    CHECK(g.edges.size() == 2);

    const Solution fast = solve_chain_dp(inst);
    const Solution slow = solve_exhaustive(inst);
    REQUIRE(fast.feasible == slow.feasible);
    CHECK(fast.profit.value() == slow.profit.value());
    CHECK(fast.profit.value() == 5);  // both constraints reduce to a -> x
}

TEST_CASE("a chain is satisfied exactly when its false literals form a prefix") {
    std::mt19937_64 rng(555);
    for (int t = 0; t < 40; ++t) {
        const int len = 2 + static_cast<int>(rng() % 4);  // strings of length 2..5
        std::vector<Constraint> cs;
        for (int i = 0; i + 1 < len; ++i)
            cs.push_back(parse_constraint("a" + std::to_string(i + 1) + " -> a" +
                                          std::to_string(i + 2)));
        for (std::uint32_t m = 0; m < (1u << len); ++m) {
            auto truth = [m](const std::string& name) {
                const int idx = std::stoi(name.substr(1)) - 1;
                return ((m >> idx) & 1u) != 0;
            };
            bool satisfied = true;
            for (const Constraint& c : cs)
                if (c.lhs.eval(truth) && !c.rhs.eval(truth)) satisfied = false;
            // False literals form a prefix: once a literal is true, every
            // later literal is true as well.
            bool prefix = true;
            bool seen_true = false;
            for (int i = 0; i < len; ++i) {
                const bool bit = ((m >> i) & 1u) != 0;
                if (seen_true && !bit) prefix = false;
                seen_true = seen_true || bit;
            }
            CHECK(satisfied == prefix);
        }
    }
}

TEST_CASE("constraint order does not change the chain dp answer") {
    std::mt19937_64 rng(8181);
    for (int t = 0; t < 40; ++t) {
        GeneratorParams gp;
        gp.m = 4 + static_cast<int>(rng() % 6);
        gp.num_attributes = 5 + static_cast<int>(rng() % 5);
        gp.num_constraints = 2 + static_cast<int>(rng() % 3);
        gp.k = static_cast<int>(rng() % (std::min(gp.m, 5) + 1));
        gp.max_attrs_per_candidate = 1;
        gp.max_attr_occurrence = 2;
        gp.max_constraint_length = 2;
        gp.seed = rng();
        const Instance inst = random_instance(gp);
        Instance shuffled = inst;
        std::shuffle(shuffled.constraints.begin(), shuffled.constraints.end(), rng);
        const Solution a = solve_chain_dp(inst);
        const Solution b = solve_chain_dp(shuffled);
        REQUIRE(a.feasible == b.feasible);
        if (a.feasible) CHECK(a.profit.value() == b.profit.value());
    }
}

TEST_CASE("string graph vertices never exceed degree two") {
    std::mt19937_64 rng(9191);
    for (int t = 0; t < 80; ++t) {
        GeneratorParams gp;
        gp.m = 4 + static_cast<int>(rng() % 6);
        gp.num_attributes = 5 + static_cast<int>(rng() % 6);
        gp.num_constraints = 2 + static_cast<int>(rng() % 4);
        gp.k = 2;
        gp.max_attrs_per_candidate = 1;
        gp.max_attr_occurrence = 2;
        gp.max_constraint_length = 2;
        gp.seed = rng();
        const Instance inst = random_instance(gp);
        for (const Cluster& cluster : cluster_constraints(normalize_simple(inst.constraints))) {
            const StringGraph g = build_strings_graph(cluster);
            std::vector<int> degree(g.vertices.size(), 0);
            for (const StringGraph::Edge& e : g.edges) {
                degree[static_cast<std::size_t>(e.from)]++;
                degree[static_cast<std::size_t>(e.to)]++;
            }
            for (int d : degree) CHECK(d <= 2);
        }
    }
}

TEST_CASE("three cycles are all or nothing") {
    const Instance inst = make_instance(
        {"a1", "a2", "a3"}, {"c1:4:a1", "c2:1:a2", "c3:1:a3", "c4:2:", "c5:2:"},
        {"a1 -> a2", "a2 -> a3", "a3 -> a1"}, 3, 0);
    const Solution fast = solve_chain_dp(inst);
    const Solution slow = solve_exhaustive(inst);
    REQUIRE(fast.feasible);
    CHECK(fast.profit.value() == slow.profit.value());
    // Either the whole cycle (4+1+1) or the two fillers plus nobody else.
    CHECK(fast.profit.value() == 6);
}

TEST_CASE("normalization can bring composite constraints into class") {
    const Instance inst = make_instance(
        {"a1", "a2", "a3"}, {"c1:2:a1", "c2:3:a2", "c3:1:a3", "c4:1:"},
        {"a1 | a2 -> a3"}, 2, 0);
    const Solution fast = solve_chain_dp(inst);
    const Solution slow = solve_exhaustive(inst);
    REQUIRE(fast.feasible == slow.feasible);
    CHECK(fast.profit.value() == slow.profit.value());
}

TEST_CASE("chain dp without constrained candidates takes the top k") {
    const Instance inst = make_instance({"a1"}, {"c1:5:", "c2:4:", "c3:1:"}, {}, 2, 9);
    const Solution sol = solve_chain_dp(inst);
    REQUIRE(sol.feasible);
    CHECK(sol.profit.value() == 9);
}

TEST_CASE("chain dp agrees with the oracle on seeded instances") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 150; ++t) {
        GeneratorParams gp;
        gp.m = 3 + static_cast<int>(rng() % 8);
        gp.num_attributes = 4 + static_cast<int>(rng() % 6);
        gp.num_constraints = 1 + static_cast<int>(rng() % 4);
        gp.k = static_cast<int>(rng() % (std::min(gp.m, 5) + 1));
        gp.max_attrs_per_candidate = 1;
        gp.max_attr_occurrence = 2;
        gp.max_constraint_length = 2;
        gp.seed = rng();
        const Instance inst = random_instance(gp);
        const Solution fast = solve_chain_dp(inst);
        const Solution slow = solve_exhaustive(inst);
        REQUIRE(fast.feasible == slow.feasible);
        if (fast.feasible) {
            CHECK(fast.profit.value() == slow.profit.value());
            CHECK(check_solution(inst, fast.committee.value()).ok());
        }
    }
}
