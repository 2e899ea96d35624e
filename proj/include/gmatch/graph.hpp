#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmatch {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex u;
  Vertex v;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal algorithmic invariant is observed to be broken.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Immutable undirected graph on vertices [0, n). Parallel edges are kept as
/// distinct edge ids; self-loops are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Incidence> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  /// Some edge joining u and v, or kNoEdge.
  EdgeId find_edge(Vertex u, Vertex v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> adjacency_;
};

Graph build_graph(int num_vertices, std::span<const std::pair<int, int>> edge_list);

/// Mate map over vertices. Each matched vertex also remembers which edge id
/// matches it, so that parallel copies of a matched pair stay unmatched.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int num_vertices)
      : mate_(num_vertices, kNoVertex), mate_edge_(num_vertices, kNoEdge) {}

  /// Builds a matching from a raw mate array without validating it; the edge
  /// of each pair is resolved against g (kNoEdge when the pair is not an edge).
  static Matching from_mates(const Graph& g, std::vector<Vertex> mates);

  int num_vertices() const { return static_cast<int>(mate_.size()); }
  Vertex mate(Vertex v) const { return mate_[v]; }
  EdgeId mate_edge(Vertex v) const { return mate_edge_[v]; }
  bool is_free(Vertex v) const { return mate_[v] == kNoVertex; }
  bool is_matched_edge(EdgeId e, Vertex endpoint) const { return mate_edge_[endpoint] == e; }
  int size() const { return size_; }

  void match(const Graph& g, EdgeId e);
  void unmatch(Vertex v);

  /// Matched pairs (u < v) with their edge ids, in increasing u.
  std::vector<std::pair<Edge, EdgeId>> pairs() const;

  const std::vector<Vertex>& mates() const { return mate_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
  std::vector<EdgeId> mate_edge_;
  int size_ = 0;
};

bool validate_matching(const Graph& g, const Matching& m);

/// Vertex sequence plus the edge joining each consecutive pair.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool empty() const { return edges.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  void append(EdgeId e, Vertex v) {
    edges.push_back(e);
    vertices.push_back(v);
  }
  /// Appends `tail`, whose first vertex must equal back().
  void splice(const Path& tail);
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Consecutive vertices joined by the stated edges, and no repeated vertex.
bool is_simple_path(const Graph& g, const Path& p);

/// Edges alternate between matched and unmatched with respect to m.
bool is_alternating(const Graph& g, const Matching& m, const Path& p);

bool is_augmenting(const Graph& g, const Matching& m, const Path& p);

/// M xor P for an alternating path whose endpoints are either free or matched
/// along P. Throws GraphError otherwise.
void flip_along(const Graph& g, Matching& m, const Path& p);

/// M xor P for an augmenting path P. Throws GraphError when P is not
/// augmenting for m.
Matching augment_along(const Graph& g, const Matching& m, const Path& p);
void augment_in_place(const Graph& g, Matching& m, const Path& p);

}  // namespace gmatch
