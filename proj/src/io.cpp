#include "cecac/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "cecac/dsl.hpp"
#include "json.hpp"

namespace cecac {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, const std::set<std::string>& keys,
                  const std::string& what) {
    if (!obj.is_object()) throw MalformedInput(what + " must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!keys.count(key)) throw MalformedInput(what + ": unknown field \"" + key + "\"");
    }
    for (const std::string& key : keys)
        if (!obj.contains(key)) throw MalformedInput(what + ": missing field \"" + key + "\"");
}

std::string get_string(const json& obj, const std::string& key, const std::string& what) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw MalformedInput(what + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

long long get_integer(const json& obj, const std::string& key, const std::string& what) {
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw MalformedInput(what + ": \"" + key + "\" must be an integer");
    return v.get<long long>();
}

std::vector<std::string> get_string_array(const json& obj, const std::string& key,
                                          const std::string& what) {
    const json& v = obj.at(key);
    if (!v.is_array()) throw MalformedInput(what + ": \"" + key + "\" must be an array");
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const json& item : v) {
        if (!item.is_string())
            throw MalformedInput(what + ": \"" + key + "\" entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

json parse_document(std::istream& in, const std::string& what) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw MalformedInput(what + ": " + e.what());
    }
    return doc;
}

}  // namespace

Instance read_instance(std::istream& in) {
    const json doc = parse_document(in, "instance");
    require_keys(doc, {"name", "attributes", "candidates", "constraints", "k", "p"},
                 "instance");

    Instance inst;
    inst.name = get_string(doc, "name", "instance");
    inst.attributes = get_string_array(doc, "attributes", "instance");

    const json& cands = doc.at("candidates");
    if (!cands.is_array()) throw MalformedInput("instance: \"candidates\" must be an array");
    for (const json& c : cands) {
        require_keys(c, {"id", "attributes", "profit"}, "candidate");
        Candidate cand;
        cand.id = get_string(c, "id", "candidate");
        cand.attributes = get_string_array(c, "attributes", "candidate");
        cand.profit = get_integer(c, "profit", "candidate");
        inst.candidates.push_back(std::move(cand));
    }

    for (const std::string& text : get_string_array(doc, "constraints", "instance")) {
        try {
            inst.constraints.push_back(parse_constraint(text));
        } catch (const ParseError& e) {
            throw MalformedInput("instance: bad constraint \"" + text + "\": " + e.what());
        }
    }

    const long long k = get_integer(doc, "k", "instance");
    if (k < 0 || k > static_cast<long long>(inst.candidates.size()))
        throw MalformedInput("instance: k out of range");
    inst.k = static_cast<int>(k);
    inst.p = get_integer(doc, "p", "instance");

    const std::vector<Violation> violations = validate_instance(inst);
    if (!violations.empty()) throw MalformedInput("instance: " + violations.front().detail);
    return inst;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open instance file: " + path);
    return read_instance(in);
}

std::string instance_to_json(const Instance& inst) {
    json doc;
    doc["name"] = inst.name;
    doc["attributes"] = inst.attributes;
    doc["candidates"] = json::array();
    for (const Candidate& c : inst.candidates) {
        json jc;
        jc["id"] = c.id;
        jc["attributes"] = c.attributes;
        jc["profit"] = c.profit;
        doc["candidates"].push_back(std::move(jc));
    }
    doc["constraints"] = json::array();
    for (const Constraint& r : inst.constraints)
        doc["constraints"].push_back(r.text.empty() ? render(r) : r.text);
    doc["k"] = inst.k;
    doc["p"] = inst.p;
    return doc.dump(2) + "\n";
}

void write_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write instance file: " + path);
    out << instance_to_json(inst);
    if (!out) throw IoError("failed writing instance file: " + path);
}

std::string solution_to_json(const Solution& sol, double elapsed_ms) {
    json doc;
    doc["feasible"] = sol.feasible;
    if (sol.feasible) {
        std::vector<std::string> ids = sol.committee.value();
        std::sort(ids.begin(), ids.end());
        doc["committee"] = ids;
        doc["profit"] = sol.profit.value();
    }
    doc["solver"] = sol.solver;
    doc["elapsed_ms"] = elapsed_ms;
    return doc.dump(2) + "\n";
}

SolutionFile read_solution(std::istream& in) {
    const json doc = parse_document(in, "solution");
    if (!doc.is_object()) throw MalformedInput("solution must be a JSON object");
    SolutionFile out;
    if (!doc.contains("feasible") || !doc.at("feasible").is_boolean())
        throw MalformedInput("solution: missing boolean \"feasible\"");
    out.feasible = doc.at("feasible").get<bool>();
    if (doc.contains("committee")) out.committee = get_string_array(doc, "committee", "solution");
    if (doc.contains("profit")) out.profit = get_integer(doc, "profit", "solution");
    if (doc.contains("solver")) out.solver = get_string(doc, "solver", "solution");
    return out;
}

SolutionFile read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open solution file: " + path);
    return read_solution(in);
}

}  // namespace cecac
