#pragma once

#include <optional>
#include <vector>

#include "gmatch/blossom.hpp"
#include "gmatch/graph.hpp"
#include "gmatch/trace.hpp"

namespace gmatch {

enum class Label : std::uint8_t { Unreached, Inner, Outer };

struct SearchOptions {
  /// Check dual feasibility, parity and tightness at every dual offset.
  bool verify = false;
  TraceSink* trace = nullptr;
};

struct SearchStats {
  int grows = 0;
  int blossoms = 0;
  long events_pushed = 0;
  long events_popped = 0;
  long events_dropped = 0;
};

/// Result of one search. With `augmented` set, the search stopped at an edge
/// joining two outer vertices of distinct trees at offset `delta_final`.
/// Otherwise the matching is maximum and the duals are materialized at an
/// offset past half the vertex count, which makes them a certificate.
struct SearchOutcome {
  bool augmented = false;
  int delta_final = 0;
  EdgeId augment_edge = kNoEdge;
  std::vector<int> y;
  std::vector<Label> label;
  BlossomForest blossoms;
  std::vector<int> z;             // per blossom index, verification only
  std::vector<NodeId> positive;   // maximal blossoms with z > 0
  SearchStats stats;
};

/// One search of Edmonds' weighted matching algorithm with w(e) = 2 on
/// matched edges and 0 elsewhere, starting from y = 1 and no blossoms.
///
/// Dual values are kept lazily: a vertex stores (base value, offset at last
/// label change, sign) so that a dual adjustment only moves the global offset.
/// Candidate edges wait in buckets indexed by the offset at which they become
/// tight; buckets beyond the horizon are never needed before an augmenting
/// path is found.
class Phase1Search {
 public:
  enum class EventKind { Grow, Blossom, Augment };
  struct Event {
    EventKind kind;
    Vertex x;  // outer endpoint
    Vertex y;
    EdgeId edge;
  };

  Phase1Search(const Graph& g, const Matching& m, SearchOptions options = {});

  SearchOutcome run();

  /// Enqueues every unmatched edge at u at the offset where it becomes tight.
  void scan_outer(Vertex u);
  /// Advances the offset to the next edge that triggers a step; nullopt once
  /// every bucket up to the horizon is exhausted.
  std::optional<Event> next_event();
  void grow_step(Vertex x, Vertex y, EdgeId e);
  void blossom_step(Vertex x, Vertex y, EdgeId e);

  int delta() const { return delta_; }
  int horizon() const { return horizon_; }
  int dual(Vertex v) const {
    const VertexState& s = st_[v];
    return s.ybase + s.sign * (delta_ - s.dbase);
  }
  Label label(Vertex v) const { return st_[v].label; }
  Vertex tree_root(Vertex v) const { return root_[v]; }
  Vertex find_base(Vertex v) { return tracker_.find_base(v); }
  const BlossomForest& blossoms() const { return forest_; }
  /// Entries of bucket d not yet popped, in FIFO order.
  std::vector<EdgeId> bucket(int d) const;
  const SearchStats& stats() const { return stats_; }

  /// Throws InvariantViolation when the current duals are infeasible, an edge
  /// of the search structure is not tight, or parity is mixed.
  void check_duals() const;

 private:
  void push(int when, EdgeId e);
  void make_outer(Vertex v);
  int weight(EdgeId e) const;
  std::optional<Event> classify(EdgeId e);
  std::vector<long> current_z(int at) const;
  SearchOutcome finish(bool augmented, EdgeId edge);

  const Graph& g_;
  const Matching& m_;
  SearchOptions options_;
  int n_;
  int horizon_;
  int delta_ = 0;

  // y(v) = ybase + sign * (delta - dbase); kept together so a scan touches
  // one record per neighbour.
  struct VertexState {
    int ybase = 1;
    int dbase = 0;
    std::int8_t sign = 0;
    Label label = Label::Unreached;
  };
  std::vector<VertexState> st_;
  std::vector<Vertex> root_;
  std::vector<Vertex> ell_;
  std::vector<EdgeId> grow_edge_;
  // Bucket d is a FIFO list threaded through entry_edge_/entry_next_.
  std::vector<int> head_, tail_;
  std::vector<EdgeId> entry_edge_;
  std::vector<int> entry_next_;
  int last_bucket_ = 0;
  BaseTracker tracker_;
  BlossomForest forest_;
  std::vector<NodeId> top_;  // by base vertex
  std::vector<int> mark_;
  int stamp_ = 0;
  SearchStats stats_;
};

SearchOutcome run_search(const Graph& g, const Matching& m, const SearchOptions& options = {});

/// 2 on matched edges, 0 otherwise.
inline int phase_weight(const Graph& g, const Matching& m, EdgeId e) {
  return m.is_matched_edge(e, g.edge(e).u) ? 2 : 0;
}

/// Sum of z over blossoms of `f` containing both u and v.
long shared_z(const BlossomForest& f, const std::vector<int>& z, Vertex u, Vertex v);

/// Whether every matched edge of `m` is tight under the outcome's y and z
/// (with weights taken from `weights_from`, the matching the search ran on).
bool matched_edges_tight(const Graph& g, const Matching& weights_from, const Matching& m,
                         const SearchOutcome& outcome);

}  // namespace gmatch
