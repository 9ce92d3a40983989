#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cecac/dsl.hpp"
#include "cecac/io.hpp"
#include "cecac/reductions.hpp"
#include "cecac/solve.hpp"

namespace py = pybind11;

namespace {

cecac::Instance instance_from_json(const std::string& text) {
    std::istringstream in(text);
    return cecac::read_instance(in);
}

py::dict solution_dict(const cecac::Solution& sol) {
    py::dict d;
    d["feasible"] = sol.feasible;
    if (sol.feasible) {
        std::vector<std::string> ids = sol.committee.value();
        std::sort(ids.begin(), ids.end());
        d["committee"] = ids;
        d["profit"] = sol.profit.value();
    }
    d["solver"] = sol.solver;
    return d;
}

}  // namespace

PYBIND11_MODULE(_cecac, m) {
    m.doc() = "exact committee selection under attribute constraints";

    auto error = py::register_exception<cecac::Error>(m, "Error");
    py::register_exception<cecac::NotApplicable>(m, "NotApplicable", error.ptr());

    m.def(
        "solve",
        [](const std::string& instance_json, const std::string& solver) {
            return solution_dict(cecac::solve(instance_from_json(instance_json),
                                              cecac::solver_choice_from_name(solver)));
        },
        py::arg("instance_json"), py::arg("solver") = "auto",
        "Solve a JSON instance; returns feasibility, committee, profit and solver.");

    m.def(
        "classify",
        [](const std::string& instance_json) {
            const cecac::Instance inst = instance_from_json(instance_json);
            const cecac::ClassDescriptor d = cecac::describe_instance(inst);
            py::dict out;
            out["max_attrs_per_candidate"] = d.max_attrs_per_candidate;
            out["max_attr_occurrence"] = d.max_attr_occurrence;
            out["max_constraint_length"] = d.max_constraint_length;
            out["solver"] = cecac::solver_name(cecac::classify_instance(inst));
            return out;
        },
        py::arg("instance_json"),
        "Structural caps of a JSON instance plus the solver they select.");

    m.def(
        "check",
        [](const std::string& instance_json, const std::vector<std::string>& committee) {
            const cecac::CheckResult r =
                cecac::check_solution(instance_from_json(instance_json), committee);
            py::dict out;
            out["ok"] = r.ok();
            out["size_ok"] = r.size_ok;
            out["constraints_ok"] = r.constraints_ok;
            out["profit_ok"] = r.profit_ok;
            out["profit"] = r.profit;
            out["violated"] = r.violated;
            return out;
        },
        py::arg("instance_json"), py::arg("committee"),
        "Re-check a committee against a JSON instance.");

    m.def(
        "canonical",
        [](const std::string& text) { return cecac::render(cecac::parse_constraint(text)); },
        py::arg("text"), "Canonical fully parenthesized form of a constraint.");

    m.def(
        "random_instance",
        [](std::uint64_t seed, int m_, int attributes, int constraints, int k,
           int max_attrs_per_candidate, int max_attr_occurrence, int max_constraint_length) {
            cecac::GeneratorParams p;
            p.seed = seed;
            p.m = m_;
            p.num_attributes = attributes;
            p.num_constraints = constraints;
            p.k = k;
            p.max_attrs_per_candidate = max_attrs_per_candidate;
            p.max_attr_occurrence = max_attr_occurrence;
            p.max_constraint_length = max_constraint_length;
            return cecac::instance_to_json(cecac::random_instance(p));
        },
        py::arg("seed") = 0, py::arg("m") = 8, py::arg("attributes") = 4,
        py::arg("constraints") = 2, py::arg("k") = 3, py::arg("max_attrs_per_candidate") = 1,
        py::arg("max_attr_occurrence") = 0, py::arg("max_constraint_length") = 0,
        "Seeded random instance as a JSON string.");
}
