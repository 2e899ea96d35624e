#pragma once

#include <functional>
#include <vector>

#include "gmatch/graph.hpp"
#include "gmatch/hgraph.hpp"
#include "gmatch/phase1.hpp"
#include "gmatch/phase2.hpp"
#include "gmatch/trace.hpp"

namespace gmatch {

struct PhaseRecord {
  int delta_final = 0;
  int num_paths = 0;
  int path_length = 0;
  double seconds = 0.0;
};

struct SolveStats {
  /// Outer-loop iterations, counting the final search that proves optimality.
  int phases = 0;
  std::vector<PhaseRecord> per_phase;  // augmenting phases only
  int matched_edges = 0;
  double total_seconds = 0.0;
};

/// Everything one augmenting phase saw; handed to SolveOptions::observer
/// before the matching is augmented.
struct PhaseView {
  const Graph& g;
  const Matching& before;
  const SearchOutcome& search;
  const HGraph& h;
  const Phase2Result& ap_set;
  const std::vector<Path>& paths;  // expanded into G
};

struct SolveOptions {
  bool verify = false;
  TraceSink* trace = nullptr;
  std::function<void(const PhaseView&)> observer;
};

struct SolveResult {
  Matching matching;
  SolveStats stats;
  /// The last search, which found no augmenting path; its duals certify that
  /// `matching` is maximum.
  SearchOutcome final_search;
};

/// Maximum cardinality matching: repeat one search to build H and one
/// depth-first pass for a maximal set of disjoint shortest augmenting paths,
/// until the search reports that no augmenting path exists.
SolveResult maximum_matching(const Graph& g, const SolveOptions& options = {});
SolveResult maximum_matching(const Graph& g, Matching warm_start, const SolveOptions& options = {});

/// 2 * ceil(sqrt(n)) + 2.
int phase_bound(int num_vertices);

}  // namespace gmatch
