#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch::testing {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> list(edges);
  return build_graph(n, list);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(edges));
}

/// Random multigraph-free graph with exactly m edges (m capped at n(n-1)/2).
inline Graph random_graph(std::mt19937_64& rng, int n, int m) {
  const int cap = n * (n - 1) / 2;
  m = std::min(m, cap);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  return Graph(n, std::move(all));
}

/// Greedy matching over a random edge order, then a random fraction dropped.
inline Matching random_matching(std::mt19937_64& rng, const Graph& g) {
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  Matching m(g.num_vertices());
  std::bernoulli_distribution keep(0.7);
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    if (m.is_free(ed.u) && m.is_free(ed.v) && keep(rng)) m.match(g, e);
  }
  return m;
}

inline Path path_from_vertices(const Graph& g, const std::vector<Vertex>& vs) {
  Path p;
  p.vertices.push_back(vs.front());
  for (std::size_t i = 1; i < vs.size(); ++i) p.append(g.find_edge(vs[i - 1], vs[i]), vs[i]);
  return p;
}

/// Matched-edge-aware path builder: prefers the matched copy of a parallel pair
/// where the alternation needs it.
inline Path alternating_path_from_vertices(const Graph& g, const Matching& m,
                                           const std::vector<Vertex>& vs) {
  Path p;
  p.vertices.push_back(vs.front());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const bool want_matched = i % 2 == 0;
    EdgeId pick = kNoEdge;
    for (const Incidence& inc : g.neighbors(vs[i - 1])) {
      if (inc.neighbor != vs[i]) continue;
      if (m.is_matched_edge(inc.edge, vs[i - 1]) == want_matched) {
        pick = inc.edge;
        break;
      }
    }
    p.append(pick, vs[i]);
  }
  return p;
}

/// Reference search: explicit duals, every dual adjustment recomputed by a
/// full edge scan. Returns nullopt when no augmenting path exists, otherwise
/// the offset at which the first augmenting edge became tight.
inline std::optional<int> naive_search_offset(const Graph& g, const Matching& m) {
  enum { kUnreached, kInner, kOuter };
  const int n = g.num_vertices();
  std::vector<int> label(n, kUnreached), root(n, -1), ell(n, -1), base(n), y(n, 1);
  for (int v = 0; v < n; ++v) base[v] = v;
  for (int v = 0; v < n; ++v) {
    if (m.is_free(v)) {
      label[v] = kOuter;
      root[v] = v;
    }
  }
  auto weight = [&](EdgeId e) { return m.is_matched_edge(e, g.edge(e).u) ? 2 : 0; };
  int delta = 0;
  for (;;) {
    bool acted = false;
    for (EdgeId e = 0; e < g.num_edges() && !acted; ++e) {
      Vertex x = g.edge(e).u, w = g.edge(e).v;
      if (label[x] != kOuter) std::swap(x, w);
      if (label[x] != kOuter || label[w] == kInner) continue;
      if (y[x] + y[w] != weight(e)) continue;
      if (label[w] == kUnreached) {
        const Vertex mate = m.mate(w);
        label[w] = kInner;
        label[mate] = kOuter;
        root[w] = root[mate] = root[x];
        ell[mate] = x;
        acted = true;
      } else if (base[x] != base[w]) {
        if (root[x] != root[w]) return delta;
        // Bases on each side up to the root; the first shared one is the NCA.
        auto chain = [&](Vertex b) {
          std::vector<Vertex> out{b};
          while (!m.is_free(b)) {
            b = base[ell[b]];
            out.push_back(b);
          }
          return out;
        };
        const auto cx = chain(base[x]), cy = chain(base[w]);
        Vertex nca = -1;
        for (Vertex b : cx) {
          if (std::find(cy.begin(), cy.end(), b) != cy.end()) {
            nca = b;
            break;
          }
        }
        std::vector<Vertex> cycle_bases;
        for (const auto* c : {&cx, &cy}) {
          for (Vertex b : *c) {
            if (b == nca) break;
            cycle_bases.push_back(b);
            cycle_bases.push_back(m.mate(b));
          }
        }
        for (Vertex v = 0; v < n; ++v) {
          if (std::find(cycle_bases.begin(), cycle_bases.end(), base[v]) != cycle_bases.end()) {
            base[v] = nca;
            label[v] = kOuter;
          }
        }
        acted = true;
      }
    }
    if (acted) continue;
    int step = -1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      Vertex x = g.edge(e).u, w = g.edge(e).v;
      if (label[x] != kOuter) std::swap(x, w);
      if (label[x] != kOuter || label[w] == kInner) continue;
      const int slack = y[x] + y[w] - weight(e);
      int d;
      if (label[w] == kUnreached) {
        d = slack;
      } else {
        if (base[x] == base[w]) continue;
        d = slack / 2;
      }
      if (step < 0 || d < step) step = d;
    }
    if (step < 0) return std::nullopt;
    delta += step;
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] == kOuter) y[v] -= step;
      if (label[v] == kInner) y[v] += step;
    }
  }
}

}  // namespace gmatch::testing
