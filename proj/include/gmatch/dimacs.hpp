#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gmatch/driver.hpp"
#include "gmatch/graph.hpp"

namespace gmatch {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// "p edge <n> <m>" header, "e <u> <v>" lines with 1-based ids, "c" comments.
Graph parse_dimacs(std::string_view text);
std::string emit_dimacs(const Graph& g);

/// "s <size>", one "m <u> <v>" per matched pair (1-based, u < v), then
/// "c key=value" stat comments when stats are given.
std::string emit_solution(const Matching& m, const SolveStats* stats = nullptr);

/// Reads the pairs of an emitted solution back as a matching of g.
Matching parse_solution(const Graph& g, std::string_view text);

}  // namespace gmatch
