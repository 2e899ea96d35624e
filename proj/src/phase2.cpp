#include "gmatch/phase2.hpp"

#include <algorithm>
#include <string>

namespace gmatch {

namespace {

void fail(const std::string& what) { throw InvariantViolation("phase 2: " + what); }

class ApSetSearch {
 public:
  ApSetSearch(const Graph& h, const Matching& hm, const Phase2Options& options)
      : h_(h),
        hm_(hm),
        options_(options),
        n_(h.num_vertices()),
        label_(n_, Label::Unreached),
        dead_(n_, 0),
        completed_(n_, 0),
        root_(n_, kNoVertex),
        ell_(n_, kNoVertex),
        grow_edge_(n_, kNoEdge),
        outer_time_(n_, 0),
        tracker_(n_),
        forest_(n_),
        top_(n_) {
    for (Vertex v = 0; v < n_; ++v) top_[v] = v;
    if (options_.verify) scanned_from_.assign(h.num_edges(), 0);
  }

  Phase2Result run() {
    for (Vertex f = 0; f < n_; ++f) {
      if (!hm_.is_free(f) || dead_[f] || label_[f] != Label::Unreached) continue;
      label_[f] = Label::Outer;
      root_[f] = f;
      outer_time_[f] = ++clock_;
      find_ap(f);
    }
    if (options_.verify) check_halt();
    Phase2Result out;
    out.path_set = std::move(paths_);
    out.stats = stats_;
    out.blossoms = std::move(forest_);
    return out;
  }

 private:
  struct Frame {
    Vertex x;
    int next;
  };

  void find_ap(Vertex start) {
    stack_.clear();
    stack_.push_back({start, 0});
    while (!stack_.empty()) {
      const Vertex x = stack_.back().x;
      const auto adj = h_.neighbors(x);
      if (stack_.back().next == static_cast<int>(adj.size())) {
        completed_[x] = 1;
        stack_.pop_back();
        continue;
      }
      const Incidence inc = adj[stack_.back().next++];
      const Vertex y = inc.neighbor;
      if (inc.edge == hm_.mate_edge(x) || dead_[y]) continue;

      ++stats_.scans;
      if (options_.verify) before_scan(x, inc.edge);

      if (label_[y] == Label::Unreached) {
        if (hm_.is_free(y)) {
          augment(x, y, inc.edge);
          stack_.clear();
          return;
        }
        grow(x, y, inc.edge);
      } else if (label_[y] == Label::Outer) {
        if (root_[y] != root_[x]) fail("outer vertices of distinct trees are adjacent");
        const Vertex bx = tracker_.find_base(x);
        const Vertex by = tracker_.find_base(y);
        const bool later = outer_time_[by] > outer_time_[bx];
        if (options_.verify && later != (by != bx && is_proper_ancestor(bx, by))) {
          fail("outer-time test disagrees with search-tree ancestry");
        }
        if (later) blossom(x, y, inc.edge, bx, by);
      }
    }
  }

  void grow(Vertex x, Vertex y, EdgeId e) {
    const Vertex mate = hm_.mate(y);
    label_[y] = Label::Inner;
    root_[y] = root_[x];
    label_[mate] = Label::Outer;
    root_[mate] = root_[x];
    ell_[mate] = x;
    grow_edge_[mate] = e;
    outer_time_[mate] = ++clock_;
    ++stats_.grows;
    if (options_.trace) options_.trace->phase2("grow", clock_, e, -1);
    stack_.push_back({mate, 0});
  }

  void blossom(Vertex x, Vertex y, EdgeId e, Vertex bx, Vertex by) {
    struct Step {
      Vertex base;
      Vertex inner;
    };
    // Walk from B_y up to B_x; inner vertices come out nearest-y first.
    std::vector<Step> steps;
    for (Vertex b = by; b != bx; b = tracker_.find_base(ell_[b])) {
      if (hm_.is_free(b)) fail("blossom walk passed the tree root");
      steps.push_back({b, hm_.mate(b)});
    }

    std::vector<NodeId> children{top_[bx]};
    std::vector<RingLink> links{{e, x, y, false}};
    for (const Step& s : steps) {
      children.push_back(top_[s.base]);
      links.push_back({hm_.mate_edge(s.base), s.base, s.inner, true});
      children.push_back(s.inner);
      links.push_back({grow_edge_[s.base], s.inner, ell_[s.base], false});
    }
    NodeId node = forest_.record_blossom(std::move(children), std::move(links), bx, clock_);
    top_[bx] = node;

    std::vector<Vertex> members{bx};
    for (const Step& s : steps) members.insert(members.end(), {s.base, s.inner});
    tracker_.merge_into(members, bx);

    // u_1 is the inner vertex nearest b(x); it becomes outer first and is
    // explored first, so its path to the root contains every later one's.
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      label_[it->inner] = Label::Outer;
      outer_time_[it->inner] = ++clock_;
    }
    ++stats_.blossoms;
    if (options_.trace) options_.trace->phase2("blossom", clock_, e, node - n_);
    if (options_.verify) check_containment(steps);
    for (const Step& s : steps) stack_.push_back({s.inner, 0});
  }

  Path path_to_root(Vertex x) {
    Path p;
    p.vertices.push_back(x);
    Vertex v = x;
    for (;;) {
      const Vertex b = tracker_.find_base(v);
      if (b != v) p.splice(forest_.extract_path(top_[b], v));
      if (hm_.is_free(b)) return p;
      p.append(hm_.mate_edge(b), hm_.mate(b));
      p.append(grow_edge_[b], ell_[b]);
      v = ell_[b];
    }
  }

  void augment(Vertex x, Vertex y, EdgeId e) {
    Path p;
    p.vertices.push_back(y);
    p.append(e, x);
    p.splice(path_to_root(x));
    if (options_.verify) {
      if (!is_augmenting(h_, hm_, p)) fail("recorded path is not augmenting");
      check_alive_outer_on(p);
    }
    for (Vertex v : p.vertices) dead_[v] = 1;
    ++stats_.augments;
    if (options_.trace) options_.trace->phase2("augment", clock_, e, -1);
    paths_.paths.push_back(std::move(p));
  }

  // --- instrumentation -------------------------------------------------

  Vertex sm_parent(Vertex v) const {
    if (root_[v] == v) return kNoVertex;
    // Vertices made outer by a grow hang below their inner mate; vertices
    // that were grown as inner hang below the outer vertex that grew them.
    if (ell_[v] != kNoVertex) return hm_.mate(v);
    return ell_[hm_.mate(v)];
  }

  bool is_proper_ancestor(Vertex a, Vertex v) const {
    for (Vertex p = sm_parent(v); p != kNoVertex; p = sm_parent(p)) {
      if (p == a) return true;
    }
    return false;
  }

  void before_scan(Vertex x, EdgeId e) {
    const Edge& ed = h_.edge(e);
    std::uint8_t bit = ed.u == x ? 1 : 2;
    if (scanned_from_[e] & bit) fail("edge scanned twice from the same end");
    scanned_from_[e] |= bit;
    check_alive_outer_on(path_to_root(x));
  }

  // Every outer vertex that is not completely scanned lies on p.
  void check_alive_outer_on(const Path& p) {
    ++visit_stamp_;
    if (visit_.size() != static_cast<std::size_t>(n_)) visit_.assign(n_, 0);
    for (Vertex v : p.vertices) visit_[v] = visit_stamp_;
    for (Vertex v = 0; v < n_; ++v) {
      if (label_[v] == Label::Outer && !dead_[v] && !completed_[v] && visit_[v] != visit_stamp_) {
        fail("outer vertex " + std::to_string(v) + " is unfinished but off the search path");
      }
    }
  }

  template <typename Steps>
  void check_containment(const Steps& steps) {
    // steps[j].inner is u_{k-j}; P(u_i) must contain P(u_j) for i < j.
    std::vector<std::vector<Vertex>> sets;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      std::vector<Vertex> vs = path_to_root(it->inner).vertices;
      std::sort(vs.begin(), vs.end());
      sets.push_back(std::move(vs));
    }
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
      if (!std::includes(sets[i].begin(), sets[i].end(), sets[i + 1].begin(), sets[i + 1].end())) {
        fail("blossom exploration order breaks path containment");
      }
    }
  }

  void check_halt() {
    std::vector<char> on_path(n_, 0);
    for (const Path& p : paths_.paths) {
      if (!is_augmenting(h_, hm_, p)) fail("recorded path is not augmenting");
      for (Vertex v : p.vertices) {
        if (on_path[v]) fail("recorded paths share a vertex");
        on_path[v] = 1;
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (static_cast<bool>(on_path[v]) != static_cast<bool>(dead_[v])) {
        fail("dead vertices differ from the recorded paths");
      }
      if (!dead_[v] && hm_.is_free(v) && label_[v] != Label::Outer) {
        fail("free vertex off the paths is not outer");
      }
    }
    for (EdgeId e = 0; e < h_.num_edges(); ++e) {
      const Edge& ed = h_.edge(e);
      if (dead_[ed.u] || dead_[ed.v]) continue;
      const Vertex bu = tracker_.find_base(ed.u), bv = tracker_.find_base(ed.v);
      for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
        if (label_[a] == Label::Outer && label_[b] != Label::Inner && bu != bv) {
          fail("edge " + std::to_string(e) + " leaves an outer vertex to a non-inner vertex");
        }
      }
      if (scanned_from_[e] == 3 && bu != bv) fail("edge scanned from both ends joins two blossoms");
    }
  }

  const Graph& h_;
  const Matching& hm_;
  Phase2Options options_;
  int n_;
  std::vector<Label> label_;
  std::vector<char> dead_;
  std::vector<char> completed_;
  std::vector<Vertex> root_;
  std::vector<Vertex> ell_;
  std::vector<EdgeId> grow_edge_;
  std::vector<long> outer_time_;
  long clock_ = 0;
  BaseTracker tracker_;
  BlossomForest forest_;
  std::vector<NodeId> top_;
  std::vector<Frame> stack_;
  PathSet paths_;
  Phase2Stats stats_;

  std::vector<std::uint8_t> scanned_from_;
  std::vector<int> visit_;
  int visit_stamp_ = 0;
};

}  // namespace

Phase2Result find_ap_set(const Graph& h, const Matching& hm, const Phase2Options& options) {
  if (!validate_matching(h, hm)) throw std::invalid_argument("find_ap_set: invalid matching");
  return ApSetSearch(h, hm, options).run();
}

Path expand_path(const Path& h_path, const HGraph& h, const Graph& g,
                 const BlossomForest& search_blossoms) {
  auto end_in = [&](EdgeId he, Vertex hv) {
    const Edge& ed = g.edge(h.preimage[he]);
    return h.label[ed.u] == hv ? ed.u : ed.v;
  };
  Path out;
  const int len = h_path.length();
  for (int i = 0; i <= len; ++i) {
    const Vertex hv = h_path.vertices[i];
    Path segment;
    if (!h.is_contracted(hv)) {
      segment.vertices.push_back(h.source[hv]);
    } else {
      const NodeId node = h.source[hv];
      const Vertex base = search_blossoms.base_of(node);
      const Vertex entry = i > 0 ? end_in(h_path.edges[i - 1], hv) : kNoVertex;
      const Vertex exit = i < len ? end_in(h_path.edges[i], hv) : kNoVertex;
      const bool entry_at_base = entry == kNoVertex || entry == base;
      const bool exit_at_base = exit == kNoVertex || exit == base;
      if (entry_at_base && exit_at_base) {
        segment.vertices.push_back(base);
      } else if (entry_at_base) {
        segment = search_blossoms.extract_path(node, exit).reversed();
      } else if (exit_at_base) {
        segment = search_blossoms.extract_path(node, entry);
      } else {
        throw InvariantViolation("expand_path: blossom entered and left away from its base");
      }
    }
    if (i == 0) {
      out = std::move(segment);
    } else {
      out.append(h.preimage[h_path.edges[i - 1]], segment.front());
      out.splice(segment);
    }
  }
  return out;
}

std::vector<Path> expand_paths(const PathSet& ps, const HGraph& h, const Graph& g,
                               const BlossomForest& search_blossoms) {
  std::vector<Path> out;
  out.reserve(ps.paths.size());
  for (const Path& p : ps.paths) out.push_back(expand_path(p, h, g, search_blossoms));
  return out;
}

}  // namespace gmatch
