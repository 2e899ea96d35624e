#pragma once

#include <vector>

#include "gmatch/blossom.hpp"
#include "gmatch/graph.hpp"
#include "gmatch/hgraph.hpp"
#include "gmatch/trace.hpp"

namespace gmatch {

struct Phase2Options {
  /// Instrumented run: checks the path-preserving invariant on every scan,
  /// the timestamp/ancestry equivalence on every blossom test and the
  /// post-halt completeness properties.
  bool verify = false;
  TraceSink* trace = nullptr;
};

struct Phase2Stats {
  long scans = 0;
  int grows = 0;
  int blossoms = 0;
  int augments = 0;
};

/// Vertex-disjoint augmenting paths of the searched graph, in discovery order.
struct PathSet {
  std::vector<Path> paths;
};

struct Phase2Result {
  PathSet path_set;
  BlossomForest blossoms;
  Phase2Stats stats;
};

/// Maximal set of vertex-disjoint augmenting paths in `h` with respect to
/// `hm`, found by a depth-first Edmonds search that keeps every partially
/// scanned outer vertex on the current search path. Recursion is replaced by
/// an explicit frame stack; finding a path discards every open frame.
Phase2Result find_ap_set(const Graph& h, const Matching& hm, const Phase2Options& options = {});

/// Converts an augmenting path of H into G by substituting edge preimages and
/// routing through each contracted blossom along its even alternating path.
Path expand_path(const Path& h_path, const HGraph& h, const Graph& g,
                 const BlossomForest& search_blossoms);

std::vector<Path> expand_paths(const PathSet& ps, const HGraph& h, const Graph& g,
                               const BlossomForest& search_blossoms);

}  // namespace gmatch
