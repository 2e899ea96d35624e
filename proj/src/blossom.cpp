#include "gmatch/blossom.hpp"

#include <string>

namespace gmatch {

BaseTracker::BaseTracker(int num_vertices)
    : parent_(num_vertices), rank_(num_vertices, 0), base_(num_vertices) {
  for (Vertex v = 0; v < num_vertices; ++v) parent_[v] = base_[v] = v;
}

Vertex BaseTracker::root(Vertex v) {
  Vertex r = v;
  while (parent_[r] != r) r = parent_[r];
  while (parent_[v] != r) {
    Vertex next = parent_[v];
    parent_[v] = r;
    v = next;
  }
  return r;
}

Vertex BaseTracker::find_base(Vertex v) {
  if (v < 0 || v >= size()) throw std::out_of_range("find_base: vertex " + std::to_string(v));
  return base_[root(v)];
}

void BaseTracker::merge_into(std::span<const Vertex> members, Vertex new_base) {
  if (members.empty()) return;
  Vertex acc = root(members[0]);
  for (std::size_t i = 1; i < members.size(); ++i) {
    Vertex r = root(members[i]);
    if (r == acc) continue;
    if (rank_[r] > rank_[acc]) std::swap(r, acc);
    parent_[r] = acc;
    if (rank_[r] == rank_[acc]) ++rank_[acc];
  }
  base_[acc] = new_base;
}

BlossomForest::BlossomForest(int num_leaves)
    : num_leaves_(num_leaves), parent_(num_leaves, kNoNode), index_in_parent_(num_leaves, -1) {}

NodeId BlossomForest::record_blossom(std::vector<NodeId> cycle, std::vector<RingLink> links,
                                     Vertex base, int created_at) {
  const std::size_t ring = cycle.size();
  if (ring < 3 || ring % 2 == 0) {
    throw BlossomError("blossom cycle must have an odd number (>= 3) of children, got " +
                       std::to_string(ring));
  }
  if (links.size() != ring) throw BlossomError("blossom needs one link per child");
  for (NodeId c : cycle) {
    if (c < 0 || c >= num_nodes()) throw BlossomError("unknown child node");
    if (parent_[c] != kNoNode) throw BlossomError("child is already nested in a blossom");
  }
  if (base_of(cycle[0]) != base) throw BlossomError("C_0 must contain the blossom base");
  for (std::size_t i = 0; i < ring; ++i) {
    const RingLink& l = links[i];
    if (l.matched != (i % 2 == 1)) throw BlossomError("ring links must alternate");
    if (l.matched && (l.from != base_of(cycle[i]) || l.to != base_of(cycle[(i + 1) % ring]))) {
      throw BlossomError("matched ring link must join child bases");
    }
  }

  NodeId id = num_nodes();
  for (std::size_t i = 0; i < ring; ++i) {
    parent_[cycle[i]] = id;
    index_in_parent_[cycle[i]] = static_cast<int>(i);
    if (!is_leaf(cycle[i])) blossom(cycle[i]).absorbed_at = created_at;
  }
  parent_.push_back(kNoNode);
  index_in_parent_.push_back(-1);
  nodes_.push_back({std::move(cycle), std::move(links), base, created_at, -1});
  return id;
}

NodeId BlossomForest::top(Vertex v) const {
  NodeId n = v;
  while (parent_[n] != kNoNode) n = parent_[n];
  return n;
}

bool BlossomForest::contains(NodeId node, Vertex v) const {
  for (NodeId n = v; n != kNoNode; n = parent_[n]) {
    if (n == node) return true;
  }
  return false;
}

std::vector<Vertex> BlossomForest::leaves(NodeId node) const {
  std::vector<Vertex> out;
  std::vector<NodeId> stack{node};
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    if (is_leaf(n)) {
      out.push_back(n);
      continue;
    }
    const auto& ch = blossom(n).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

namespace {

// chain[0] is the entry leaf, chain[pos] the node being walked, chain[pos-1]
// the child of that node containing the entry.
struct WalkTask {
  bool is_edge;
  EdgeId edge;
  int chain;
  int pos;
  bool reversed;
};

}  // namespace

Path BlossomForest::extract_path(NodeId node, Vertex v) const {
  if (node < 0 || node >= num_nodes() || v < 0 || v >= num_leaves_) {
    throw BlossomError("extract_path: bad node or vertex");
  }
  std::vector<std::vector<NodeId>> chains;
  auto make_chain = [&](Vertex entry, NodeId target) {
    std::vector<NodeId> chain;
    NodeId n = entry;
    chain.push_back(n);
    while (n != target) {
      n = parent_[n];
      if (n == kNoNode) throw BlossomError("extract_path: vertex not in blossom");
      chain.push_back(n);
    }
    chains.push_back(std::move(chain));
    return static_cast<int>(chains.size()) - 1;
  };

  Path out;
  std::vector<WalkTask> stack;
  {
    int c = make_chain(v, node);
    stack.push_back({false, kNoEdge, c, static_cast<int>(chains[c].size()) - 1, false});
  }

  struct Piece {
    bool is_edge;
    EdgeId edge;
    NodeId child;
    Vertex entry;  // kNoVertex: reuse the parent's chain
    bool reversed;
  };
  std::vector<Piece> pieces;
  EdgeId pending_edge = kNoEdge;

  while (!stack.empty()) {
    WalkTask t = stack.back();
    stack.pop_back();
    if (t.is_edge) {
      pending_edge = t.edge;
      continue;
    }
    if (t.pos == 0) {
      Vertex leaf = chains[t.chain][0];
      if (out.vertices.empty()) {
        out.vertices.push_back(leaf);
      } else {
        out.append(pending_edge, leaf);
      }
      continue;
    }

    NodeId cur = chains[t.chain][t.pos];
    const BlossomNode& b = blossom(cur);
    const int ring = static_cast<int>(b.children.size());
    const int j = index_in_parent_[chains[t.chain][t.pos - 1]];
    pieces.clear();
    pieces.push_back({false, kNoEdge, b.children[j], kNoVertex, false});
    if (j != 0) {
      bool forward = b.links[j].matched;
      if (!forward && !b.links[j - 1].matched) {
        throw BlossomError("extract_path: child has no matched ring link");
      }
      bool entered_matched = true;
      if (forward) {
        pieces.push_back({true, b.links[j].edge, kNoNode, kNoVertex, false});
        for (int h = j + 1;; ++h) {
          if (h == ring) {
            pieces.push_back({false, kNoEdge, b.children[0], b.links[ring - 1].to, false});
            break;
          }
          if (entered_matched) {
            pieces.push_back({false, kNoEdge, b.children[h], b.links[h].from, true});
          } else {
            pieces.push_back({false, kNoEdge, b.children[h], b.links[h - 1].to, false});
          }
          pieces.push_back({true, b.links[h].edge, kNoNode, kNoVertex, false});
          entered_matched = !entered_matched;
        }
      } else {
        pieces.push_back({true, b.links[j - 1].edge, kNoNode, kNoVertex, false});
        for (int h = j - 1;; --h) {
          if (h == 0) {
            pieces.push_back({false, kNoEdge, b.children[0], b.links[0].from, false});
            break;
          }
          if (entered_matched) {
            pieces.push_back({false, kNoEdge, b.children[h], b.links[h - 1].to, true});
          } else {
            pieces.push_back({false, kNoEdge, b.children[h], b.links[h].from, false});
          }
          pieces.push_back({true, b.links[h - 1].edge, kNoNode, kNoVertex, false});
          entered_matched = !entered_matched;
        }
      }
    }

    // Push so that the first piece to emit ends up on top.
    auto push_piece = [&](const Piece& p) {
      if (p.is_edge) {
        stack.push_back({true, p.edge, -1, 0, false});
      } else if (p.entry == kNoVertex) {
        stack.push_back({false, kNoEdge, t.chain, t.pos - 1, t.reversed != p.reversed});
      } else {
        int c = make_chain(p.entry, p.child);
        stack.push_back({false, kNoEdge, c, static_cast<int>(chains[c].size()) - 1,
                         t.reversed != p.reversed});
      }
    };
    if (t.reversed) {
      for (const Piece& p : pieces) push_piece(p);
    } else {
      for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) push_piece(*it);
    }
  }
  return out;
}

}  // namespace gmatch
