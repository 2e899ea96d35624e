#pragma once

#include <vector>

#include "gmatch/graph.hpp"
#include "gmatch/phase1.hpp"

namespace gmatch {

/// Tight-edge graph left by an augmenting search: every positive blossom is
/// contracted to one vertex and only tight edges between distinct vertices
/// survive. Its augmenting paths are exactly the images of the shortest
/// augmenting paths of G.
struct HGraph {
  Graph graph;
  Matching matching;              // image of the G matching
  std::vector<EdgeId> preimage;   // H edge -> G edge
  std::vector<Vertex> label;      // G vertex -> H vertex
  std::vector<NodeId> source;     // H vertex -> search blossom node (a leaf for singletons)

  bool is_contracted(Vertex h) const { return source[h] >= static_cast<NodeId>(label.size()); }
};

HGraph build_H(const Graph& g, const Matching& m, const SearchOutcome& outcome);

}  // namespace gmatch
