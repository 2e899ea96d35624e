#pragma once

#include <stdexcept>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch {

/// Tracks the base vertex of the blossom containing each vertex. Backed by
/// union-find with union by rank and path compression.
class BaseTracker {
 public:
  BaseTracker() = default;
  explicit BaseTracker(int num_vertices);

  /// Base of the blossom currently containing v. Throws std::out_of_range for
  /// an unregistered vertex.
  Vertex find_base(Vertex v);

  /// Unites the sets containing each of `members` and makes `new_base` the
  /// base of the result. new_base must lie in one of those sets.
  void merge_into(std::span<const Vertex> members, Vertex new_base);

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  Vertex root(Vertex v);

  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<Vertex> base_;  // indexed by set root
};

class BlossomError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Node ids below num_leaves() are leaves (the vertex with that id); larger
/// ids are blossoms in creation order.
using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Edge joining child i to child i+1 (mod ring size). `from` lies in child i,
/// `to` in child i+1.
struct RingLink {
  EdgeId edge;
  Vertex from;
  Vertex to;
  bool matched;
};

struct BlossomNode {
  std::vector<NodeId> children;  // C_0 .. C_k, C_0 holds the base
  std::vector<RingLink> links;   // links[i] joins children[i] and children[i+1 mod k+1]
  Vertex base = kNoVertex;
  int created_at = 0;
  int absorbed_at = -1;  // time this blossom became a child, -1 while maximal
};

/// Ordered-tree representations of nested blossoms over a fixed leaf set.
class BlossomForest {
 public:
  BlossomForest() = default;
  explicit BlossomForest(int num_leaves);

  /// Adds a blossom whose children are `cycle` in ring order. Every child
  /// must currently be a root. Links must alternate unmatched/matched starting
  /// with an unmatched link out of C_0, which contains `base`.
  NodeId record_blossom(std::vector<NodeId> cycle, std::vector<RingLink> links, Vertex base,
                        int created_at);

  int num_leaves() const { return num_leaves_; }
  int num_blossoms() const { return static_cast<int>(nodes_.size()); }
  int num_nodes() const { return num_leaves_ + num_blossoms(); }

  bool is_leaf(NodeId id) const { return id < num_leaves_; }
  const BlossomNode& blossom(NodeId id) const { return nodes_[id - num_leaves_]; }
  BlossomNode& blossom(NodeId id) { return nodes_[id - num_leaves_]; }
  NodeId blossom_id(int index) const { return num_leaves_ + index; }

  NodeId parent(NodeId id) const { return parent_[id]; }
  int index_in_parent(NodeId id) const { return index_in_parent_[id]; }
  Vertex base_of(NodeId id) const { return is_leaf(id) ? id : blossom(id).base; }

  /// Outermost node containing leaf v.
  NodeId top(Vertex v) const;
  bool contains(NodeId node, Vertex v) const;
  std::vector<Vertex> leaves(NodeId node) const;

  /// Even-length alternating path from leaf v to base_of(node), starting with
  /// the matched edge at v. Empty (the single vertex v) when v is the base.
  Path extract_path(NodeId node, Vertex v) const;

 private:
  int num_leaves_ = 0;
  std::vector<BlossomNode> nodes_;
  std::vector<NodeId> parent_;
  std::vector<int> index_in_parent_;
};

}  // namespace gmatch
