#include "gmatch/phase1.hpp"

#include <algorithm>
#include <string>

namespace gmatch {

namespace {

void fail(const std::string& what) { throw InvariantViolation("phase 1: " + what); }

}  // namespace

Phase1Search::Phase1Search(const Graph& g, const Matching& m, SearchOptions options)
    : g_(g),
      m_(m),
      options_(options),
      n_(g.num_vertices()),
      horizon_((g.num_vertices() + 1) / 2),
      st_(n_),
      root_(n_, kNoVertex),
      ell_(n_, kNoVertex),
      grow_edge_(n_, kNoEdge),
      head_(horizon_ + 1, -1),
      tail_(horizon_ + 1, -1),
      tracker_(n_),
      forest_(n_),
      top_(n_),
      mark_(n_, 0) {
  if (!validate_matching(g, m)) throw std::invalid_argument("run_search: invalid matching");
  for (Vertex v = 0; v < n_; ++v) top_[v] = v;
  entry_edge_.reserve(2 * static_cast<std::size_t>(g.num_edges()));
  entry_next_.reserve(2 * static_cast<std::size_t>(g.num_edges()));
  for (Vertex v = 0; v < n_; ++v) {
    if (!m_.is_free(v)) continue;
    st_[v].label = Label::Outer;
    root_[v] = v;
    st_[v].sign = -1;
  }
  for (Vertex v = 0; v < n_; ++v) {
    if (m_.is_free(v)) scan_outer(v);
  }
}

int Phase1Search::weight(EdgeId e) const { return phase_weight(g_, m_, e); }

void Phase1Search::push(int when, EdgeId e) {
  if (when > horizon_) {
    ++stats_.events_dropped;
    return;
  }
  const int id = static_cast<int>(entry_edge_.size());
  entry_edge_.push_back(e);
  entry_next_.push_back(-1);
  if (tail_[when] < 0) {
    head_[when] = id;
  } else {
    entry_next_[tail_[when]] = id;
  }
  tail_[when] = id;
  last_bucket_ = std::max(last_bucket_, when);
  ++stats_.events_pushed;
}

std::vector<EdgeId> Phase1Search::bucket(int d) const {
  std::vector<EdgeId> out;
  if (d < 0 || d > horizon_) return out;
  for (int i = head_[d]; i >= 0; i = entry_next_[i]) out.push_back(entry_edge_[i]);
  return out;
}

void Phase1Search::make_outer(Vertex v) {
  st_[v].ybase = dual(v);
  st_[v].dbase = delta_;
  st_[v].sign = -1;
  st_[v].label = Label::Outer;
}

void Phase1Search::scan_outer(Vertex u) {
  const int yu = dual(u);
  for (const Incidence& inc : g_.neighbors(u)) {
    if (inc.edge == m_.mate_edge(u)) continue;
    const Vertex v = inc.neighbor;
    const Label lv = st_[v].label;
    if (lv == Label::Inner) continue;
    const int slack = yu + dual(v);
    if (slack < 0) fail("edge " + std::to_string(inc.edge) + " has negative slack");
    if (lv == Label::Unreached) {
      push(delta_ + slack, inc.edge);
    } else {
      if (tracker_.find_base(u) == tracker_.find_base(v)) continue;
      if (slack % 2 != 0) fail("outer-outer slack is odd");
      push(delta_ + slack / 2, inc.edge);
    }
  }
}

std::optional<Phase1Search::Event> Phase1Search::classify(EdgeId e) {
  ++stats_.events_popped;
  const Edge& ed = g_.edge(e);
  Vertex x = ed.u, y = ed.v;
  if (st_[x].label != Label::Outer) std::swap(x, y);
  if (st_[x].label != Label::Outer) fail("queued edge has no outer endpoint");
  const Label ly = st_[y].label;
  if (ly == Label::Inner) return std::nullopt;
  if (ly == Label::Outer && tracker_.find_base(x) == tracker_.find_base(y)) return std::nullopt;
  const int slack = dual(x) + dual(y) - weight(e);
  if (slack < 0) fail("edge " + std::to_string(e) + " has negative slack");
  if (ly == Label::Unreached) {
    if (slack > 0) {
      push(delta_ + slack, e);
      return std::nullopt;
    }
    return Event{EventKind::Grow, x, y, e};
  }
  if (slack > 0) {
    push(delta_ + slack / 2, e);
    return std::nullopt;
  }
  if (root_[x] == root_[y]) return Event{EventKind::Blossom, x, y, e};
  return Event{EventKind::Augment, x, y, e};
}

std::optional<Phase1Search::Event> Phase1Search::next_event() {
  for (;;) {
    while (head_[delta_] >= 0) {
      const int id = head_[delta_];
      head_[delta_] = entry_next_[id];
      if (head_[delta_] < 0) tail_[delta_] = -1;
      if (auto ev = classify(entry_edge_[id])) return ev;
    }
    if (options_.verify) check_duals();
    if (delta_ >= last_bucket_) return std::nullopt;
    // Dual adjustment: only the global offset moves.
    ++delta_;
  }
}

void Phase1Search::grow_step(Vertex x, Vertex y, EdgeId e) {
  if (st_[x].label != Label::Outer || st_[y].label != Label::Unreached) {
    throw std::logic_error("grow_step: needs an outer and an unreached endpoint");
  }
  if (m_.is_free(y)) throw std::logic_error("grow_step: free endpoint is an augment");
  const Vertex mate = m_.mate(y);
  st_[y].ybase = dual(y);
  st_[y].dbase = delta_;
  st_[y].sign = 1;
  st_[y].label = Label::Inner;
  root_[y] = root_[x];
  make_outer(mate);
  root_[mate] = root_[x];
  ell_[mate] = x;
  grow_edge_[mate] = e;
  ++stats_.grows;
  if (options_.trace) options_.trace->phase1("grow", delta_, e, -1);
  scan_outer(mate);
}

void Phase1Search::blossom_step(Vertex x, Vertex y, EdgeId e) {
  const Vertex bx = tracker_.find_base(x);
  const Vertex by = tracker_.find_base(y);
  if (bx == by || root_[x] != root_[y] || st_[x].label != Label::Outer ||
      st_[y].label != Label::Outer) {
    throw std::logic_error("blossom_step: needs outer vertices of one tree in distinct blossoms");
  }

  // Climb both paths in parallel until one reaches a base the other visited.
  ++stamp_;
  mark_[bx] = mark_[by] = stamp_;
  Vertex cx = bx, cy = by, nca = kNoVertex;
  bool x_done = m_.is_free(bx), y_done = m_.is_free(by);
  while (nca == kNoVertex) {
    if (!x_done) {
      cx = tracker_.find_base(ell_[cx]);
      if (mark_[cx] == stamp_) {
        nca = cx;
        break;
      }
      mark_[cx] = stamp_;
      x_done = m_.is_free(cx);
    }
    if (!y_done) {
      cy = tracker_.find_base(ell_[cy]);
      if (mark_[cy] == stamp_) {
        nca = cy;
        break;
      }
      mark_[cy] = stamp_;
      y_done = m_.is_free(cy);
    }
    if (x_done && y_done) fail("blossom endpoints do not share an ancestor");
  }

  struct Step {
    Vertex base;
    Vertex inner;
  };
  auto branch = [&](Vertex from) {
    std::vector<Step> steps;
    for (Vertex b = from; b != nca; b = tracker_.find_base(ell_[b])) steps.push_back({b, m_.mate(b)});
    return steps;
  };
  const std::vector<Step> xs = branch(bx);
  const std::vector<Step> ys = branch(by);

  std::vector<NodeId> children{top_[nca]};
  std::vector<RingLink> links;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    links.push_back({grow_edge_[it->base], ell_[it->base], it->inner, false});
    children.push_back(it->inner);
    links.push_back({m_.mate_edge(it->inner), it->inner, it->base, true});
    children.push_back(top_[it->base]);
  }
  links.push_back({e, x, y, false});
  for (const Step& s : ys) {
    children.push_back(top_[s.base]);
    links.push_back({m_.mate_edge(s.base), s.base, s.inner, true});
    children.push_back(s.inner);
    links.push_back({grow_edge_[s.base], s.inner, ell_[s.base], false});
  }
  NodeId node = forest_.record_blossom(std::move(children), std::move(links), nca, delta_);
  top_[nca] = node;

  std::vector<Vertex> members{nca};
  for (const Step& s : xs) members.insert(members.end(), {s.base, s.inner});
  for (const Step& s : ys) members.insert(members.end(), {s.base, s.inner});
  tracker_.merge_into(members, nca);

  for (const Step& s : xs) make_outer(s.inner);
  for (const Step& s : ys) make_outer(s.inner);
  ++stats_.blossoms;
  if (options_.trace) options_.trace->phase1("blossom", delta_, e, node - n_);
  for (const Step& s : xs) scan_outer(s.inner);
  for (const Step& s : ys) scan_outer(s.inner);
}

std::vector<long> Phase1Search::current_z(int at) const {
  std::vector<long> z(forest_.num_blossoms());
  for (int i = 0; i < forest_.num_blossoms(); ++i) {
    const BlossomNode& b = forest_.blossom(forest_.blossom_id(i));
    int end = b.absorbed_at < 0 ? at : std::min(at, b.absorbed_at);
    z[i] = 2L * (end - b.created_at);
  }
  return z;
}

void Phase1Search::check_duals() const {
  const std::vector<long> z = current_z(delta_);
  std::vector<int> zi(z.begin(), z.end());
  const int parity = ((1 - delta_) % 2 + 2) % 2;
  for (Vertex v = 0; v < n_; ++v) {
    const int yv = dual(v);
    if (st_[v].label == Label::Unreached) {
      if (yv != 1) fail("vertex outside the search structure has y != 1");
    } else if (((yv % 2) + 2) % 2 != parity) {
      fail("y values of the search structure have mixed parity");
    }
  }
  for (long zb : z) {
    if (zb < 0 || zb % 2 != 0) fail("blossom dual is negative or odd");
  }
  auto slack = [&](EdgeId e) {
    const Edge& ed = g_.edge(e);
    return static_cast<long>(dual(ed.u)) + dual(ed.v) + shared_z(forest_, zi, ed.u, ed.v) -
           weight(e);
  };
  for (EdgeId e = 0; e < g_.num_edges(); ++e) {
    long s = slack(e);
    if (s < 0) fail("edge " + std::to_string(e) + " is not dominated");
    if (weight(e) == 2 && s != 0) fail("matched edge " + std::to_string(e) + " is not tight");
  }
  for (Vertex v = 0; v < n_; ++v) {
    if (grow_edge_[v] != kNoEdge && slack(grow_edge_[v]) != 0) fail("grow edge is not tight");
  }
  for (int i = 0; i < forest_.num_blossoms(); ++i) {
    for (const RingLink& l : forest_.blossom(forest_.blossom_id(i)).links) {
      if (slack(l.edge) != 0) fail("blossom ring edge is not tight");
    }
  }
}

SearchOutcome Phase1Search::finish(bool augmented, EdgeId edge) {
  SearchOutcome out;
  out.augmented = augmented;
  out.augment_edge = edge;
  if (augmented) {
    out.delta_final = delta_;
    if (options_.verify && delta_ > n_ / 2) fail("augmenting offset exceeds n/2");
  } else {
    out.delta_final = std::max(delta_, n_ / 2 + 1);
  }
  const int saved = delta_;
  delta_ = out.delta_final;
  out.y.resize(n_);
  for (Vertex v = 0; v < n_; ++v) out.y[v] = dual(v);
  const std::vector<long> z = current_z(delta_);
  delta_ = saved;
  out.z.assign(z.begin(), z.end());
  out.label.resize(n_);
  for (Vertex v = 0; v < n_; ++v) out.label[v] = st_[v].label;

  if (augmented) {
    std::vector<NodeId> stack;
    for (int i = 0; i < forest_.num_blossoms(); ++i) {
      NodeId id = forest_.blossom_id(i);
      if (forest_.parent(id) == kNoNode) stack.push_back(id);
    }
    while (!stack.empty()) {
      NodeId id = stack.back();
      stack.pop_back();
      const BlossomNode& b = forest_.blossom(id);
      if (b.created_at < out.delta_final) {
        out.positive.push_back(id);
        continue;
      }
      for (NodeId c : b.children) {
        if (!forest_.is_leaf(c)) stack.push_back(c);
      }
    }
    std::sort(out.positive.begin(), out.positive.end());
  }
  out.stats = stats_;
  out.blossoms = std::move(forest_);
  return out;
}

SearchOutcome Phase1Search::run() {
  while (auto ev = next_event()) {
    switch (ev->kind) {
      case EventKind::Grow:
        grow_step(ev->x, ev->y, ev->edge);
        break;
      case EventKind::Blossom:
        blossom_step(ev->x, ev->y, ev->edge);
        break;
      case EventKind::Augment:
        if (options_.trace) options_.trace->phase1("augment", delta_, ev->edge, -1);
        if (options_.verify) check_duals();
        return finish(true, ev->edge);
    }
  }
  return finish(false, kNoEdge);
}

SearchOutcome run_search(const Graph& g, const Matching& m, const SearchOptions& options) {
  Phase1Search search(g, m, options);
  return search.run();
}

long shared_z(const BlossomForest& f, const std::vector<int>& z, Vertex u, Vertex v) {
  // Blossoms containing both ends are the common ancestors of the two leaves.
  std::vector<NodeId> au;
  for (NodeId n = f.parent(u); n != kNoNode; n = f.parent(n)) au.push_back(n);
  if (au.empty()) return 0;
  std::vector<NodeId> av;
  for (NodeId n = f.parent(v); n != kNoNode; n = f.parent(n)) av.push_back(n);
  long sum = 0;
  auto iu = au.rbegin();
  auto iv = av.rbegin();
  for (; iu != au.rend() && iv != av.rend() && *iu == *iv; ++iu, ++iv) {
    sum += z[*iu - f.num_leaves()];
  }
  return sum;
}

bool matched_edges_tight(const Graph& g, const Matching& weights_from, const Matching& m,
                         const SearchOutcome& outcome) {
  for (auto [pair, e] : m.pairs()) {
    long lhs = static_cast<long>(outcome.y[pair.u]) + outcome.y[pair.v] +
               shared_z(outcome.blossoms, outcome.z, pair.u, pair.v);
    if (lhs != phase_weight(g, weights_from, e)) return false;
  }
  return true;
}

}  // namespace gmatch
