#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cecac/dsl.hpp"
#include "cecac/io.hpp"
#include "cecac/model.hpp"
#include "cecac/reductions.hpp"
#include "cecac/solve.hpp"

// Exit codes: 0 feasible / ok, 1 infeasible / violated, 2 input error,
// 3 solver not applicable to the instance.

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int run_solve(const std::string& path, const std::string& solver, bool as_json) {
    const cecac::Instance inst = cecac::read_instance_file(path);
    const cecac::SolverChoice choice = cecac::solver_choice_from_name(solver);
    const auto t0 = Clock::now();
    const cecac::Solution sol = cecac::solve(inst, choice);
    const double elapsed = ms_since(t0);

    if (as_json) {
        std::cout << cecac::solution_to_json(sol, elapsed);
    } else {
        std::cout << "feasible: " << (sol.feasible ? "yes" : "no") << "\n";
        if (sol.feasible) {
            std::vector<std::string> ids = sol.committee.value();
            std::sort(ids.begin(), ids.end());
            std::cout << "committee:";
            for (const std::string& id : ids) std::cout << " " << id;
            std::cout << "\nprofit: " << sol.profit.value() << "\n";
        }
        std::cout << "solver: " << sol.solver << "\n";
        std::cout << "elapsed_ms: " << elapsed << "\n";
    }
    return sol.feasible ? 0 : 1;
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
    const cecac::Instance inst = cecac::read_instance_file(instance_path);
    const cecac::SolutionFile sol = cecac::read_solution_file(solution_path);
    const cecac::CheckResult check = cecac::check_solution(inst, sol.committee);

    if (!check.size_ok)
        std::cout << "size: committee has " << sol.committee.size() << " members, expected "
                  << inst.k << "\n";
    for (const std::string& text : check.violated) std::cout << "violated: " << text << "\n";
    if (!check.profit_ok)
        std::cout << "profit: " << check.profit << " < " << inst.p << "\n";
    if (check.ok()) {
        std::cout << "ok: profit " << check.profit << " with " << inst.k
                  << " members, all constraints hold\n";
        return 0;
    }
    return 1;
}

int run_generate(const std::string& mode, const std::string& graph_path, int kprime,
                 std::uint64_t seed, const std::string& out_path) {
    cecac::Instance inst;
    if (mode == "random") {
        if (!graph_path.empty() || kprime >= 0)
            throw cecac::InconsistentParams("random mode takes no --graph or --kprime");
        cecac::GeneratorParams params;
        params.seed = seed;
        inst = cecac::random_instance(params);
    } else {
        if (graph_path.empty())
            throw cecac::InconsistentParams("mode " + mode + " needs --graph");
        if (kprime < 0) throw cecac::InconsistentParams("mode " + mode + " needs --kprime");
        const cecac::Graph g = cecac::parse_edge_list_file(graph_path);
        if (mode == "clique2")
            inst = cecac::clique_to_cecac_two_attrs(g, kprime);
        else if (mode == "clique1")
            inst = cecac::clique_to_cecac_single_attr(g, kprime);
        else if (mode == "indset")
            inst = cecac::independent_set_to_cecac(g, kprime);
        else
            throw cecac::InconsistentParams("unknown mode " + mode);
    }

    const std::vector<cecac::Violation> violations = cecac::validate_instance(inst);
    if (!violations.empty())
        throw cecac::InconsistentParams("generated instance is invalid: " +
                                        violations.front().detail);

    if (out_path.empty())
        std::cout << cecac::instance_to_json(inst);
    else
        cecac::write_instance_file(inst, out_path);
    return 0;
}

int run_classify(const std::string& path) {
    const cecac::Instance inst = cecac::read_instance_file(path);
    const cecac::ClassDescriptor d = cecac::describe_instance(inst);
    std::cout << "name: " << inst.name << "\n"
              << "candidates: " << inst.candidates.size() << "\n"
              << "attributes: " << inst.attributes.size() << "\n"
              << "constraints: " << inst.constraints.size() << "\n"
              << "max_attrs_per_candidate: " << d.max_attrs_per_candidate << "\n"
              << "max_attr_occurrence: " << d.max_attr_occurrence << "\n"
              << "max_constraint_length: " << d.max_constraint_length << "\n"
              << "solver: " << cecac::solver_name(cecac::classify_instance(inst)) << "\n";
    return 0;
}

// Seeded instance families for the dichotomy benchmark: small enough for
// the exhaustive solver, shaped to land in one specialized class.
struct DichotomyRow {
    const char* solver;
    cecac::SolverChoice choice;
    int attr_lo, attr_hi;
    int max_attrs_per_candidate;
    int max_attr_occurrence;
    int max_constraint_length;
};

cecac::GeneratorParams draw_params(const DichotomyRow& row, std::mt19937_64& rng) {
    auto next = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    cecac::GeneratorParams p;
    p.m = next(3, 12);
    p.num_attributes = next(row.attr_lo, row.attr_hi);
    p.num_constraints = next(1, 4);
    p.k = next(0, std::min(p.m, 6));
    p.max_attrs_per_candidate = row.max_attrs_per_candidate;
    p.max_attr_occurrence = row.max_attr_occurrence;
    p.max_constraint_length = row.max_constraint_length;
    p.seed = rng();
    return p;
}

cecac::Instance tree_scaling_instance(int m, int l, int d, int k) {
    cecac::Instance inst;
    inst.name = "scaling-tree";
    inst.k = k;
    for (int a = 1; a <= l; ++a) inst.attributes.push_back("a" + std::to_string(a));
    for (int c = 1; c <= m; ++c) {
        cecac::Candidate cand;
        cand.id = "c" + std::to_string(c);
        if (c <= l) cand.attributes = {"a" + std::to_string(c)};
        cand.profit = (c * 37) % 101 - 20;
        inst.candidates.push_back(std::move(cand));
    }
    // Five fresh attributes per constraint keep every occurrence unique.
    for (int j = 0; j < d; ++j) {
        const int b = 5 * j;
        auto a = [b](int off) { return "a" + std::to_string(b + off); };
        inst.constraints.push_back(cecac::parse_constraint(
            "(" + a(1) + " & " + a(2) + ") -> (" + a(3) + " | ~" + a(4) + " | " + a(5) + ")"));
    }
    inst.p = 60 * static_cast<cecac::Profit>(k) / 2;
    return inst;
}

cecac::Instance chain_scaling_instance(int m, int d, int k) {
    cecac::Instance inst;
    inst.name = "scaling-chain";
    inst.k = k;
    for (int a = 1; a <= m; ++a) inst.attributes.push_back("a" + std::to_string(a));
    for (int c = 1; c <= m; ++c) {
        cecac::Candidate cand;
        cand.id = "c" + std::to_string(c);
        cand.attributes = {"a" + std::to_string(c)};
        cand.profit = (c * 53) % 97 - 15;
        inst.candidates.push_back(std::move(cand));
    }
    auto a = [](int i) { return "a" + std::to_string(i); };
    int used = 0;
    int count = 0;
    // Three-cycles first, then open chains of two implications, until the
    // constraint budget is spent. Every attribute occurs at most twice.
    while (count + 3 <= d * 4 / 5) {
        inst.constraints.push_back(cecac::parse_constraint(a(used + 1) + " -> " + a(used + 2)));
        inst.constraints.push_back(cecac::parse_constraint(a(used + 2) + " -> " + a(used + 3)));
        inst.constraints.push_back(cecac::parse_constraint(a(used + 3) + " -> " + a(used + 1)));
        used += 3;
        count += 3;
    }
    while (count + 2 <= d) {
        inst.constraints.push_back(cecac::parse_constraint(a(used + 1) + " -> " + a(used + 2)));
        inst.constraints.push_back(
            cecac::parse_constraint(a(used + 2) + " -> ~" + a(used + 3)));
        used += 3;
        count += 2;
    }
    inst.p = 40 * static_cast<cecac::Profit>(k) / 2;
    return inst;
}

cecac::Instance fpt_scaling_instance(int m, int k) {
    cecac::Instance inst;
    inst.name = "scaling-fpt";
    inst.k = k;
    for (int a = 1; a <= 14; ++a) inst.attributes.push_back("a" + std::to_string(a));
    // Attribute sets repeat with period 14, so the type count stays at 14
    // no matter how many candidates there are.
    for (int c = 0; c < m; ++c) {
        cecac::Candidate cand;
        cand.id = "c" + std::to_string(c + 1);
        cand.attributes = {"a" + std::to_string(c % 7 + 1),
                           "a" + std::to_string(8 + c % 2)};
        std::sort(cand.attributes.begin(), cand.attributes.end());
        cand.profit = (c * 29) % 61 - 10;
        inst.candidates.push_back(std::move(cand));
    }
    inst.constraints.push_back(cecac::parse_constraint("(a1 & a8) -> (a2 | a10)"));
    inst.constraints.push_back(cecac::parse_constraint("(a3 | a4) -> ~(a5 & a9)"));
    inst.constraints.push_back(cecac::parse_constraint("a6 -> (a7 | a11 | a12)"));
    inst.constraints.push_back(cecac::parse_constraint("(a13 | a14) -> a1"));
    inst.p = 25 * static_cast<cecac::Profit>(k) / 2;
    return inst;
}

int run_bench(const std::string& suite, int trials, std::uint64_t seed,
              const std::string& csv_path) {
    std::ostringstream csv;
    csv << "suite,solver,m,l,d,k,trials,agreements,max_ms\n";

    if (suite == "dichotomy" && trials > 0) {
        const DichotomyRow rows[] = {
            {"treedp", cecac::SolverChoice::TreeDp, 6, 12, 1, 1, 0},
            {"chaindp", cecac::SolverChoice::ChainDp, 4, 12, 1, 2, 2},
            {"fpt", cecac::SolverChoice::Fpt, 2, 6, 3, 0, 4},
        };
        for (const DichotomyRow& row : rows) {
            std::mt19937_64 rng(seed);
            int agreements = 0;
            double max_ms = 0.0;
            for (int t = 0; t < trials; ++t) {
                const cecac::Instance inst = cecac::random_instance(draw_params(row, rng));
                const auto t0 = Clock::now();
                const cecac::Solution fast = cecac::solve(inst, row.choice);
                max_ms = std::max(max_ms, ms_since(t0));
                const cecac::Solution slow = cecac::solve(inst, cecac::SolverChoice::Oracle);
                if (fast.feasible == slow.feasible &&
                    (!fast.feasible || fast.profit == slow.profit))
                    agreements++;
            }
            csv << "dichotomy," << row.solver << ",12," << row.attr_hi << ",4,6," << trials
                << "," << agreements << "," << max_ms << "\n";
        }
    } else if (suite == "scaling" && trials > 0) {
        struct ScalingRow {
            const char* solver;
            cecac::SolverChoice choice;
            cecac::Instance inst;
            int l, d;
        };
        const ScalingRow rows[] = {
            {"treedp", cecac::SolverChoice::TreeDp, tree_scaling_instance(500, 500, 100, 25),
             500, 100},
            {"chaindp", cecac::SolverChoice::ChainDp, chain_scaling_instance(300, 150, 20),
             300, 150},
            {"fpt", cecac::SolverChoice::Fpt, fpt_scaling_instance(200, 15), 14, 4},
        };
        for (const ScalingRow& row : rows) {
            double max_ms = 0.0;
            for (int t = 0; t < trials; ++t) {
                const auto t0 = Clock::now();
                (void)cecac::solve(row.inst, row.choice);
                max_ms = std::max(max_ms, ms_since(t0));
            }
            csv << "scaling," << row.solver << "," << row.inst.candidates.size() << ","
                << row.l << "," << row.d << "," << row.inst.k << "," << trials << ","
                << trials << "," << max_ms << "\n";
        }
    } else if (suite != "dichotomy" && suite != "scaling") {
        throw cecac::MalformedInput("unknown suite \"" + suite + "\"");
    }

    if (csv_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(csv_path);
        if (!out) throw cecac::IoError("cannot write CSV file: " + csv_path);
        out << csv.str();
        if (!out) throw cecac::IoError("failed writing CSV file: " + csv_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact committee selection under attribute constraints"};
    app.require_subcommand(1);

    std::string solve_path, solve_solver = "auto";
    bool solve_json = false;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    solve_cmd->add_option("path", solve_path, "instance file")->required();
    solve_cmd->add_option("--solver", solve_solver, "auto|oracle|treedp|fpt|chaindp");
    solve_cmd->add_flag("--json", solve_json, "emit the solution as JSON");

    std::string verify_instance, verify_solution;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution file");
    verify_cmd->add_option("instance", verify_instance, "instance file")->required();
    verify_cmd->add_option("solution", verify_solution, "solution file")->required();

    std::string gen_mode = "random", gen_graph, gen_out;
    int gen_kprime = -1;
    std::uint64_t gen_seed = 0;
    CLI::App* gen_cmd = app.add_subcommand("generate", "emit an instance file");
    gen_cmd->add_option("--mode", gen_mode, "random|clique2|clique1|indset");
    gen_cmd->add_option("--graph", gen_graph, "edge list file (header \"n m\", one edge per line)");
    gen_cmd->add_option("--kprime", gen_kprime, "clique or independent-set size");
    gen_cmd->add_option("--seed", gen_seed, "random mode seed");
    gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

    std::string bench_suite = "dichotomy", bench_csv;
    int bench_trials = 100;
    std::uint64_t bench_seed = 0;
    CLI::App* bench_cmd = app.add_subcommand("bench", "agreement and timing report");
    bench_cmd->add_option("--suite", bench_suite, "dichotomy|scaling");
    bench_cmd->add_option("--trials", bench_trials, "trials per row");
    bench_cmd->add_option("--seed", bench_seed, "base seed");
    bench_cmd->add_option("--csv", bench_csv, "CSV output path (default stdout)");

    std::string classify_path;
    CLI::App* classify_cmd = app.add_subcommand("classify", "report instance structure");
    classify_cmd->add_option("path", classify_path, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_path, solve_solver, solve_json);
        if (verify_cmd->parsed()) return run_verify(verify_instance, verify_solution);
        if (gen_cmd->parsed())
            return run_generate(gen_mode, gen_graph, gen_kprime, gen_seed, gen_out);
        if (bench_cmd->parsed())
            return run_bench(bench_suite, bench_trials, bench_seed, bench_csv);
        if (classify_cmd->parsed()) return run_classify(classify_path);
    } catch (const cecac::NotApplicable& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 3;
    } catch (const cecac::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
