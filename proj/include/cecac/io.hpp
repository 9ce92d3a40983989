#pragma once

#include <iosfwd>
#include <string>

#include "cecac/model.hpp"

namespace cecac {

// Instance files are JSON documents:
//   {name, attributes:[string],
//    candidates:[{id, attributes:[string], profit:int}],
//    constraints:[string], k:int, p:int}
// Parsing is strict: unknown fields, missing fields, and non-integer profits
// are rejected (MalformedInput). The parsed instance must pass
// validate_instance. Constraint strings keep their original text, so a
// read/write/read cycle is byte-stable.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);

std::string instance_to_json(const Instance& inst);
void write_instance_file(const Instance& inst, const std::string& path);

// Solution files mirror Solution:
//   {feasible:bool, committee:[string], profit:int, solver:string,
//    elapsed_ms:number}
// committee and profit are present only for feasible solutions; the
// committee is sorted by candidate id.
std::string solution_to_json(const Solution& sol, double elapsed_ms);

// Reads the committee of a solution file for re-verification. Only the
// committee is needed; the other fields are checked for shape.
struct SolutionFile {
    bool feasible = false;
    std::vector<std::string> committee;
    Profit profit = 0;
    std::string solver;
};
SolutionFile read_solution(std::istream& in);
SolutionFile read_solution_file(const std::string& path);

}  // namespace cecac
