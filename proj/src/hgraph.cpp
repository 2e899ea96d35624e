#include "gmatch/hgraph.hpp"

namespace gmatch {

HGraph build_H(const Graph& g, const Matching& m, const SearchOutcome& outcome) {
  if (!outcome.augmented) throw std::invalid_argument("build_H: search did not augment");
  const int n = g.num_vertices();
  const BlossomForest& forest = outcome.blossoms;

  std::vector<NodeId> owner(n);
  for (Vertex v = 0; v < n; ++v) owner[v] = v;
  for (NodeId b : outcome.positive) {
    for (Vertex v : forest.leaves(b)) owner[v] = b;
  }

  HGraph h;
  h.label.assign(n, kNoVertex);
  std::vector<Vertex> id_of(forest.num_nodes(), kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    NodeId o = owner[v];
    if (id_of[o] == kNoVertex) {
      id_of[o] = static_cast<Vertex>(h.source.size());
      h.source.push_back(o);
    }
    h.label[v] = id_of[o];
  }

  // One record per endpoint keeps the edge sweep to a cache line per end.
  struct EndInfo {
    Vertex label;
    int y;
    EdgeId mate_edge;
  };
  std::vector<EndInfo> info(n);
  for (Vertex v = 0; v < n; ++v) info[v] = {h.label[v], outcome.y[v], m.mate_edge(v)};

  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  h.preimage.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const EndInfo& a = info[ed.u];
    const EndInfo& b = info[ed.v];
    if (a.label == b.label) continue;
    const int w = a.mate_edge == e ? 2 : 0;
    if (a.y + b.y != w) continue;
    edges.push_back({a.label, b.label});
    h.preimage.push_back(e);
  }
  h.graph = Graph(static_cast<int>(h.source.size()), std::move(edges));
  h.matching = Matching(h.graph.num_vertices());
  for (EdgeId he = 0; he < h.graph.num_edges(); ++he) {
    EdgeId e = h.preimage[he];
    if (m.is_matched_edge(e, g.edge(e).u)) h.matching.match(h.graph, he);
  }
  return h;
}

}  // namespace gmatch
