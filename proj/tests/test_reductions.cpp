#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cecac/dsl.hpp"
#include "cecac/io.hpp"
#include "cecac/oracle.hpp"
#include "cecac/reductions.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cecac;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

// Truth of a constraint family under one total assignment.
bool holds(const std::vector<Constraint>& cs,
           const std::map<std::string, bool>& assign) {
    auto truth = [&assign](const std::string& a) { return assign.at(a); };
    for (const Constraint& c : cs)
        if (c.lhs.eval(truth) && !c.rhs.eval(truth)) return false;
    return true;
}

// The split family must be satisfiable over the fresh attributes exactly
// when the original constraint holds, for every base assignment.
void check_split_equivalent(const Constraint& original, const SplitResult& split) {
    std::vector<std::string> base = original.lhs.attributes();
    for (const std::string& a : original.rhs.attributes()) base.push_back(a);
    const std::size_t nb = base.size();
    const std::size_t nf = split.fresh_attributes.size();
    REQUIRE(nb + nf <= 16);
    for (std::uint32_t bm = 0; bm < (1u << nb); ++bm) {
        std::map<std::string, bool> assign;
        for (std::size_t i = 0; i < nb; ++i) assign[base[i]] = (bm >> i) & 1u;
        bool any_extension = false;
        for (std::uint32_t fm = 0; fm < (1u << nf); ++fm) {
            for (std::size_t i = 0; i < nf; ++i)
                assign[split.fresh_attributes[i]] = (fm >> i) & 1u;
            if (holds(split.constraints, assign)) {
                any_extension = true;
                break;
            }
        }
        CHECK(any_extension == holds({original}, assign));
    }
}

}  // namespace

TEST_CASE("graph degrees and regularity") {
    CHECK(testutil::cycle_graph(4).regular_degree() == 2);
    CHECK(testutil::complete_graph(4).regular_degree() == 3);
    CHECK(testutil::petersen_graph().regular_degree() == 3);
    CHECK(testutil::petersen_graph().edges.size() == 15);
    const Graph path = testutil::path_graph(3);
    CHECK(path.degree(0) == 1);
    CHECK(path.degree(1) == 2);
    CHECK(path.regular_degree() == -1);
    CHECK(Graph{}.regular_degree() == 0);
}

TEST_CASE("edge lists parse and normalize") {
    const Graph g = parse("3 2\n1 0\n1 2\n");
    CHECK(g.n == 3);
    CHECK(g.edges == (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_AS(parse("x"), MalformedInput);
    CHECK_THROWS_AS(parse("-1 0\n"), MalformedInput);
    CHECK_THROWS_AS(parse("2 2\n0 1\n"), MalformedInput);   // truncated
    CHECK_THROWS_AS(parse("2 1\n0 2\n"), MalformedInput);   // out of range
    CHECK_THROWS_AS(parse("2 1\n1 1\n"), MalformedInput);   // self-loop
    CHECK_THROWS_AS(parse("2 2\n0 1\n1 0\n"), MalformedInput);  // duplicate
    CHECK_THROWS_AS(parse_edge_list_file("/nonexistent/graph.txt"), IoError);
}

TEST_CASE("two attribute clique reduction has the published dimensions") {
    const Instance inst = clique_to_cecac_two_attrs(testutil::complete_graph(3), 3);
    CHECK(inst.candidates.size() == 18);
    CHECK(inst.attributes.size() == 30);
    CHECK(inst.k == 18);
    CHECK(inst.p == 9);
    CHECK(validate_instance(inst).empty());
    const ClassDescriptor d = describe_instance(inst);
    CHECK(d.max_attrs_per_candidate == 2);
    CHECK(d.max_attr_occurrence == 1);
    CHECK(d.max_constraint_length == 2);
}

TEST_CASE("two attribute clique reduction decides triangles") {
    CHECK(solve_exhaustive(clique_to_cecac_two_attrs(testutil::complete_graph(3), 3))
              .feasible);
    CHECK_FALSE(
        solve_exhaustive(clique_to_cecac_two_attrs(testutil::cycle_graph(4), 3))
            .feasible);
}

TEST_CASE("two attribute clique reduction admits the edge witness") {
    const Instance inst = clique_to_cecac_two_attrs(testutil::petersen_graph(), 2);
    CHECK(inst.k == 7);
    CHECK(inst.p == 1);
    // Petersen edge e0 joins vertices 0 and 1; seat its candidate plus the
    // relay pairs of both endpoints down to the profit -1 sinks.
    const std::vector<std::string> committee = {
        "c_e0", "c_v0_h1", "c_v1_h1", "d_v0_h1", "d_v1_h1", "g_v0", "g_v1"};
    const CheckResult res = check_solution(inst, committee);
    CHECK(res.ok());
    CHECK(res.profit == 1);
}

TEST_CASE("single attribute clique reduction has the published dimensions") {
    const Instance inst = clique_to_cecac_single_attr(testutil::complete_graph(3), 3);
    CHECK(inst.candidates.size() == 12);
    CHECK(inst.k == 12);
    CHECK(inst.p == 0);
    CHECK(validate_instance(inst).empty());
    const ClassDescriptor d = describe_instance(inst);
    CHECK(d.max_attrs_per_candidate == 1);
    CHECK(d.max_attr_occurrence == 2);
}

TEST_CASE("single attribute clique reduction decides triangles") {
    CHECK(
        solve_exhaustive(clique_to_cecac_single_attr(testutil::complete_graph(3), 3))
            .feasible);
    CHECK_FALSE(
        solve_exhaustive(clique_to_cecac_single_attr(testutil::cycle_graph(4), 3))
            .feasible);
}

TEST_CASE("clique reductions reject irregular graphs and tiny cliques") {
    const Graph path = testutil::path_graph(3);
    CHECK_THROWS_AS(clique_to_cecac_two_attrs(path, 2), NotRegular);
    CHECK_THROWS_AS(clique_to_cecac_single_attr(path, 2), NotRegular);
    const Graph k3 = testutil::complete_graph(3);
    CHECK_THROWS_AS(clique_to_cecac_two_attrs(k3, 1), InconsistentParams);
    CHECK_THROWS_AS(clique_to_cecac_single_attr(k3, 1), InconsistentParams);
}

TEST_CASE("independent set reduction decides independent sets") {
    CHECK(solve_exhaustive(independent_set_to_cecac(testutil::path_graph(3), 2))
              .feasible);
    CHECK_FALSE(
        solve_exhaustive(independent_set_to_cecac(testutil::complete_graph(3), 2))
            .feasible);
    CHECK(solve_exhaustive(independent_set_to_cecac(testutil::cycle_graph(5), 2))
              .feasible);
    CHECK_FALSE(
        solve_exhaustive(independent_set_to_cecac(testutil::cycle_graph(5), 3))
            .feasible);
}

TEST_CASE("independent set reduction shape") {
    const Instance inst = independent_set_to_cecac(testutil::path_graph(3), 2);
    CHECK(inst.candidates.size() == 3);
    CHECK(inst.k == 2);
    CHECK(inst.p == 2);
    CHECK(inst.constraints.size() == 1);
    for (const Candidate& c : inst.candidates) CHECK(c.profit == 1);

    Graph edgeless;
    edgeless.n = 3;
    const Instance free = independent_set_to_cecac(edgeless, 3);
    CHECK(free.constraints.size() == 1);  // tautology placeholder
    CHECK(solve_exhaustive(free).feasible);

    const Instance empty = independent_set_to_cecac(Graph{}, 0);
    CHECK(empty.constraints.empty());
    CHECK(solve_exhaustive(empty).feasible);
    CHECK_THROWS_AS(independent_set_to_cecac(Graph{}, -1), InconsistentParams);
}

TEST_CASE("fanin3 split of four disjuncts") {
    const Constraint r = parse_constraint("a1 | a2 | a3 | a4 -> b");
    const SplitResult s = split_constraint(r, SplitMode::Fanin3);
    CHECK(s.constraints.size() == 3);
    CHECK(s.fresh_attributes ==
          (std::vector<std::string>{"__aux_1", "__aux_2"}));
    for (const Constraint& c : s.constraints) {
        std::vector<std::string> attrs = c.lhs.attributes();
        for (const std::string& a : c.rhs.attributes()) attrs.push_back(a);
        CHECK(attrs.size() <= 3);
    }
    check_split_equivalent(r, s);
}

TEST_CASE("fanin2 split of four disjuncts") {
    const Constraint r = parse_constraint("a1 | a2 | a3 | a4 -> b");
    const SplitResult s = split_constraint(r, SplitMode::Fanin2);
    CHECK(s.constraints.size() == 7);
    CHECK(s.fresh_attributes ==
          (std::vector<std::string>{"__aux_1", "__aux_2", "__aux_3"}));
    for (const Constraint& c : s.constraints) {
        CHECK(c.lhs.kind() == Formula::Kind::Literal);
        const bool literal_rhs =
            c.rhs.kind() == Formula::Kind::Literal ||
            (c.rhs.kind() == Formula::Kind::Not &&
             c.rhs.child().kind() == Formula::Kind::Literal);
        CHECK(literal_rhs);
    }
    check_split_equivalent(r, s);
}

TEST_CASE("split edge cases") {
    const Constraint two = parse_constraint("a1 | a2 -> ~b");
    const SplitResult base2 = split_constraint(two, SplitMode::Fanin2);
    CHECK(base2.constraints.size() == 2);
    CHECK(base2.fresh_attributes.empty());
    check_split_equivalent(two, base2);

    const SplitResult keep = split_constraint(two, SplitMode::Fanin3);
    CHECK(keep.constraints.size() == 1);
    CHECK(keep.fresh_attributes.empty());

    const Constraint three = parse_constraint("a1 | a2 | a3 -> b");
    const SplitResult s3 = split_constraint(three, SplitMode::Fanin3);
    CHECK(s3.constraints.size() == 2);
    CHECK(s3.fresh_attributes == std::vector<std::string>{"__aux_1"});
    check_split_equivalent(three, s3);

    const Constraint five = parse_constraint("a1 | a2 | a3 | a4 | a5 -> ~b");
    check_split_equivalent(five, split_constraint(five, SplitMode::Fanin3));
    check_split_equivalent(five, split_constraint(five, SplitMode::Fanin2));
}

TEST_CASE("fresh names dodge attributes already in the constraint") {
    const Constraint r = parse_constraint("__aux_1 | a2 | a3 -> b");
    const SplitResult s = split_constraint(r, SplitMode::Fanin3);
    CHECK(s.fresh_attributes == std::vector<std::string>{"__aux_2"});
    check_split_equivalent(r, s);
}

TEST_CASE("split rejects shapes it cannot handle") {
    CHECK_THROWS_AS(split_constraint(parse_constraint("a1 & a2 -> b"),
                                     SplitMode::Fanin3),
                    MalformedInput);
    CHECK_THROWS_AS(split_constraint(parse_constraint("a1 -> b"),
                                     SplitMode::Fanin3),
                    MalformedInput);
    CHECK_THROWS_AS(split_constraint(parse_constraint("~a1 | a2 -> b"),
                                     SplitMode::Fanin3),
                    MalformedInput);
    CHECK_THROWS_AS(split_constraint(parse_constraint("a1 | a2 -> b | c"),
                                     SplitMode::Fanin2),
                    MalformedInput);
}

TEST_CASE("the generator is deterministic per seed") {
    GeneratorParams gp;
    gp.seed = 99;
    const std::string a = instance_to_json(random_instance(gp));
    const std::string b = instance_to_json(random_instance(gp));
    CHECK(a == b);
    gp.seed = 100;
    CHECK(a != instance_to_json(random_instance(gp)));
}

TEST_CASE("the generator respects its caps") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        GeneratorParams gp;
        gp.m = 2 + static_cast<int>(rng() % 10);
        gp.num_attributes = 2 + static_cast<int>(rng() % 7);
        gp.num_constraints = static_cast<int>(rng() % 5);
        gp.k = static_cast<int>(rng() % (gp.m + 1));
        gp.max_attrs_per_candidate = 1 + static_cast<int>(rng() % 3);
        gp.max_attr_occurrence = static_cast<int>(rng() % 3);
        gp.max_constraint_length = (t % 2 == 0) ? 0 : 2 + static_cast<int>(rng() % 3);
        gp.seed = rng();
        const Instance inst = random_instance(gp);
        CHECK(validate_instance(inst).empty());
        CHECK(inst.candidates.size() == static_cast<std::size_t>(gp.m));
        CHECK(inst.k == gp.k);
        CHECK(inst.constraints.size() <= static_cast<std::size_t>(gp.num_constraints));
        const ClassDescriptor d = describe_instance(inst);
        CHECK(d.max_attrs_per_candidate <= gp.max_attrs_per_candidate);
        if (gp.max_attr_occurrence > 0)
            CHECK(d.max_attr_occurrence <= gp.max_attr_occurrence);
        if (gp.max_constraint_length > 0)
            CHECK(d.max_constraint_length <= gp.max_constraint_length);
        for (const Candidate& c : inst.candidates) {
            CHECK(c.profit >= gp.profit_lo);
            CHECK(c.profit <= gp.profit_hi);
        }
    }
}

TEST_CASE("the generator rejects inconsistent parameters") {
    GeneratorParams gp;
    gp.m = -1;
    CHECK_THROWS_AS(random_instance(gp), InconsistentParams);
    gp = GeneratorParams{};
    gp.k = gp.m + 1;
    CHECK_THROWS_AS(random_instance(gp), InconsistentParams);
    gp = GeneratorParams{};
    gp.profit_lo = 5;
    gp.profit_hi = 4;
    CHECK_THROWS_AS(random_instance(gp), InconsistentParams);
    gp = GeneratorParams{};
    gp.max_constraint_length = 1;
    CHECK_THROWS_AS(random_instance(gp), InconsistentParams);
}
