#include "gmatch/graph.hpp"

#include <algorithm>

namespace gmatch {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  offsets_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw GraphError("edge " + std::to_string(i) + " has an endpoint outside [0, " +
                       std::to_string(n_) + ")");
    }
    if (e.u == e.v) throw GraphError("edge " + std::to_string(i) + " is a self-loop");
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[e.u]++] = {e.v, static_cast<EdgeId>(i)};
    adjacency_[fill[e.v]++] = {e.u, static_cast<EdgeId>(i)};
  }
}

EdgeId Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return kNoEdge;
  if (degree(u) > degree(v)) std::swap(u, v);
  for (const Incidence& inc : neighbors(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return kNoEdge;
}

Graph build_graph(int num_vertices, std::span<const std::pair<int, int>> edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (auto [u, v] : edge_list) edges.push_back({u, v});
  return Graph(num_vertices, std::move(edges));
}

Matching Matching::from_mates(const Graph& g, std::vector<Vertex> mates) {
  Matching m;
  m.mate_ = std::move(mates);
  m.mate_edge_.assign(m.mate_.size(), kNoEdge);
  for (std::size_t v = 0; v < m.mate_.size(); ++v) {
    Vertex w = m.mate_[v];
    if (w == kNoVertex) continue;
    ++m.size_;
    m.mate_edge_[v] = g.find_edge(static_cast<Vertex>(v), w);
  }
  m.size_ /= 2;
  return m;
}

void Matching::match(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (mate_[ed.u] != kNoVertex || mate_[ed.v] != kNoVertex) {
    throw GraphError("match: endpoint already matched");
  }
  mate_[ed.u] = ed.v;
  mate_[ed.v] = ed.u;
  mate_edge_[ed.u] = e;
  mate_edge_[ed.v] = e;
  ++size_;
}

void Matching::unmatch(Vertex v) {
  Vertex w = mate_[v];
  if (w == kNoVertex) return;
  mate_[v] = mate_[w] = kNoVertex;
  mate_edge_[v] = mate_edge_[w] = kNoEdge;
  --size_;
}

std::vector<std::pair<Edge, EdgeId>> Matching::pairs() const {
  std::vector<std::pair<Edge, EdgeId>> out;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (mate_[v] != kNoVertex && v < mate_[v]) out.push_back({{v, mate_[v]}, mate_edge_[v]});
  }
  return out;
}

bool validate_matching(const Graph& g, const Matching& m) {
  if (m.num_vertices() != g.num_vertices()) return false;
  int matched = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Vertex w = m.mate(v);
    if (w == kNoVertex) {
      if (m.mate_edge(v) != kNoEdge) return false;
      continue;
    }
    if (w == v || w < 0 || w >= g.num_vertices()) return false;
    if (m.mate(w) != v) return false;
    EdgeId e = m.mate_edge(v);
    if (e < 0 || e >= g.num_edges() || m.mate_edge(w) != e) return false;
    const Edge& ed = g.edge(e);
    if (!((ed.u == v && ed.v == w) || (ed.u == w && ed.v == v))) return false;
    ++matched;
  }
  return matched == 2 * m.size();
}

void Path::splice(const Path& tail) {
  if (tail.vertices.empty()) return;
  if (vertices.empty()) {
    *this = tail;
    return;
  }
  if (tail.vertices.front() != vertices.back()) throw GraphError("splice: paths do not meet");
  vertices.insert(vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  edges.insert(edges.end(), tail.edges.begin(), tail.edges.end());
}

Path Path::reversed() const {
  return {{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
}

bool is_simple_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return p.edges.empty();
  if (p.edges.size() + 1 != p.vertices.size()) return false;
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= g.num_vertices()) return false;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    EdgeId e = p.edges[i];
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    Vertex a = p.vertices[i], b = p.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  std::vector<Vertex> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_alternating(const Graph& g, const Matching& m, const Path& p) {
  if (!is_simple_path(g, p)) return false;
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
    bool a = m.is_matched_edge(p.edges[i], p.vertices[i]);
    bool b = m.is_matched_edge(p.edges[i + 1], p.vertices[i + 1]);
    if (a == b) return false;
  }
  return true;
}

bool is_augmenting(const Graph& g, const Matching& m, const Path& p) {
  if (p.edges.empty() || p.length() % 2 == 0) return false;
  if (!m.is_free(p.front()) || !m.is_free(p.back())) return false;
  return is_alternating(g, m, p);
}

void flip_along(const Graph& g, Matching& m, const Path& p) {
  if (!is_alternating(g, m, p)) throw GraphError("flip_along: path is not alternating");
  if (p.edges.empty()) return;
  auto end_ok = [&](Vertex v, EdgeId incident) {
    return m.is_free(v) || m.mate_edge(v) == incident;
  };
  if (!end_ok(p.front(), p.edges.front()) || !end_ok(p.back(), p.edges.back())) {
    throw GraphError("flip_along: endpoint matched off the path");
  }
  std::vector<EdgeId> to_match;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (m.is_matched_edge(p.edges[i], p.vertices[i])) {
      m.unmatch(p.vertices[i]);
    } else {
      to_match.push_back(p.edges[i]);
    }
  }
  for (EdgeId e : to_match) m.match(g, e);
}

void augment_in_place(const Graph& g, Matching& m, const Path& p) {
  if (!is_augmenting(g, m, p)) throw GraphError("augment_along: path is not augmenting");
  flip_along(g, m, p);
}

Matching augment_along(const Graph& g, const Matching& m, const Path& p) {
  Matching out = m;
  augment_in_place(g, out, p);
  return out;
}

}  // namespace gmatch
