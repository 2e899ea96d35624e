#include "gmatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "gmatch/phase1.hpp"

namespace gmatch {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

struct MatchingSearch {
  const std::vector<std::uint32_t>& adj;
  int best = -1;
  std::vector<std::pair<Vertex, Vertex>> current, best_pairs;

  void run(std::uint32_t active) {
    int top_degree = 0;
    Vertex pick = kNoVertex;
    for (std::uint32_t rest = active; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      int d = std::popcount(adj[v] & active);
      if (d == 0) {
        active &= ~(1u << v);
      } else if (d > top_degree) {
        top_degree = d;
        pick = v;
      }
    }
    const int cur = static_cast<int>(current.size());
    if (cur + std::popcount(active) / 2 <= best) return;
    if (pick == kNoVertex) {
      best = cur;
      best_pairs = current;
      return;
    }
    const std::uint32_t without = active & ~(1u << pick);
    for (std::uint32_t nb = adj[pick] & active; nb; nb &= nb - 1) {
      Vertex u = std::countr_zero(nb);
      current.push_back({pick, u});
      run(without & ~(1u << u));
      current.pop_back();
    }
    run(without);
  }
};

void guard(const Graph& g, int limit, const char* what) {
  if (g.num_vertices() > limit) {
    throw OracleRefused(std::string(what) + ": " + std::to_string(g.num_vertices()) +
                        " vertices exceeds the limit of " + std::to_string(limit));
  }
}

// Depth-first enumeration of simple alternating paths from `start` that begin
// with an unmatched edge. Records augmenting ones whose length passes `accept`.
template <typename Accept>
void alternating_walk(const Graph& g, const Matching& m, Vertex start, int max_length,
                      Accept&& accept, std::set<std::vector<Vertex>>& out) {
  std::vector<Vertex> path{start};
  std::uint32_t visited = 1u << start;
  auto rec = [&](auto&& self, Vertex at) -> void {
    const int len = static_cast<int>(path.size()) - 1;
    for (const Incidence& inc : g.neighbors(at)) {
      const Vertex w = inc.neighbor;
      if (inc.edge == m.mate_edge(at) || (visited >> w) & 1u) continue;
      if (m.is_free(w)) {
        if (accept(len + 1)) {
          std::vector<Vertex> p = path;
          p.push_back(w);
          if (p.front() > p.back()) std::reverse(p.begin(), p.end());
          out.insert(std::move(p));
        }
        continue;
      }
      const Vertex w2 = m.mate(w);
      if ((visited >> w2) & 1u || len + 2 >= max_length) continue;
      path.insert(path.end(), {w, w2});
      visited |= (1u << w) | (1u << w2);
      self(self, w2);
      visited &= ~((1u << w) | (1u << w2));
      path.resize(path.size() - 2);
    }
  };
  rec(rec, start);
}

}  // namespace

BruteMatching brute_max_matching(const Graph& g) {
  guard(g, kMaxMatchingOracleVertices, "brute_max_matching");
  const auto adj = adjacency_masks(g);
  MatchingSearch search{adj, -1, {}, {}};
  const std::uint32_t all =
      g.num_vertices() == 32 ? ~0u : ((1u << g.num_vertices()) - 1u);
  search.run(all);
  BruteMatching out{search.best, Matching(g.num_vertices())};
  for (auto [u, v] : search.best_pairs) out.witness.match(g, g.find_edge(u, v));
  return out;
}

std::optional<SapSet> brute_saps(const Graph& g, const Matching& m) {
  guard(g, kMaxPathOracleVertices, "brute_saps");
  for (int target = 1; target < std::max(2, g.num_vertices()); target += 2) {
    std::set<std::vector<Vertex>> found;
    for (Vertex f = 0; f < g.num_vertices(); ++f) {
      if (!m.is_free(f)) continue;
      alternating_walk(g, m, f, target, [&](int len) { return len == target; }, found);
    }
    if (!found.empty()) return SapSet{target, {found.begin(), found.end()}};
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> enumerate_augmenting_paths(const Graph& g, const Matching& m) {
  guard(g, kMaxPathOracleVertices, "enumerate_augmenting_paths");
  std::set<std::vector<Vertex>> found;
  for (Vertex f = 0; f < g.num_vertices(); ++f) {
    if (!m.is_free(f)) continue;
    alternating_walk(g, m, f, g.num_vertices(), [](int) { return true; }, found);
  }
  return {found.begin(), found.end()};
}

bool verify_sap_set_maximal(const Graph& g, const Matching& m, const std::vector<Path>& paths) {
  const auto saps = brute_saps(g, m);
  if (!saps) return paths.empty();
  std::vector<char> used(g.num_vertices(), 0);
  for (const Path& p : paths) {
    if (!is_augmenting(g, m, p) || p.length() != saps->length) return false;
    for (Vertex v : p.vertices) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  for (const auto& sap : saps->paths) {
    if (std::none_of(sap.begin(), sap.end(), [&](Vertex v) { return used[v] != 0; })) return false;
  }
  return true;
}

Certificate make_certificate(const SearchOutcome& outcome, const Matching& m) {
  const BlossomForest& f = outcome.blossoms;
  const int leaves = f.num_leaves();
  Certificate cert;
  cert.y.assign(outcome.y.begin(), outcome.y.end());
  cert.z.assign(outcome.z.begin(), outcome.z.end());
  cert.blossom_parent.resize(f.num_blossoms());
  for (int i = 0; i < f.num_blossoms(); ++i) {
    NodeId p = f.parent(f.blossom_id(i));
    cert.blossom_parent[i] = p == kNoNode ? -1 : p - leaves;
  }
  cert.vertex_blossom.resize(leaves);
  for (Vertex v = 0; v < leaves; ++v) {
    NodeId p = f.parent(v);
    cert.vertex_blossom[v] = p == kNoNode ? -1 : p - leaves;
  }
  cert.matching = m;
  return cert;
}

bool check_certificate(const Graph& g, const Certificate& cert) {
  const int n = g.num_vertices();
  const int nb = static_cast<int>(cert.blossom_parent.size());
  if (static_cast<int>(cert.y.size()) != n || static_cast<int>(cert.vertex_blossom.size()) != n ||
      static_cast<int>(cert.z.size()) != nb) {
    throw CertificateError("certificate arrays do not match the graph");
  }
  for (int p : cert.blossom_parent) {
    if (p < -1 || p >= nb) throw CertificateError("blossom parent out of range");
  }
  for (int b : cert.vertex_blossom) {
    if (b < -1 || b >= nb) throw CertificateError("vertex blossom out of range");
  }

  // Depths, rejecting cycles in the parent relation.
  std::vector<int> depth(nb, -1);
  for (int b = 0; b < nb; ++b) {
    std::vector<int> chain;
    int c = b;
    while (c != -1 && depth[c] < 0) {
      if (depth[c] == -2) throw CertificateError("blossom family is not laminar (cycle)");
      depth[c] = -2;
      chain.push_back(c);
      c = cert.blossom_parent[c];
    }
    int d = c == -1 ? -1 : depth[c];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
  }

  if (!validate_matching(g, cert.matching)) return false;
  for (long z : cert.z) {
    if (z < 0 || z % 2 != 0) return false;
  }

  // Binary lifting over the blossom forest.
  int levels = 1;
  while ((1 << levels) <= nb) ++levels;
  std::vector<std::vector<int>> up(levels, std::vector<int>(nb, -1));
  up[0] = cert.blossom_parent;
  for (int k = 1; k < levels; ++k) {
    for (int b = 0; b < nb; ++b) up[k][b] = up[k - 1][b] < 0 ? -1 : up[k - 1][up[k - 1][b]];
  }
  auto lca = [&](int a, int b) {
    if (a < 0 || b < 0) return -1;
    if (depth[a] < depth[b]) std::swap(a, b);
    for (int k = levels - 1; k >= 0; --k) {
      if (up[k][a] >= 0 && depth[up[k][a]] >= depth[b]) a = up[k][a];
    }
    if (a == b) return a;
    for (int k = levels - 1; k >= 0; --k) {
      if (up[k][a] != up[k][b]) {
        a = up[k][a];
        b = up[k][b];
      }
    }
    return up[0][a];
  };

  std::vector<int> order(nb);
  for (int b = 0; b < nb; ++b) order[b] = b;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] < depth[b]; });
  std::vector<long> zsum(nb, 0);
  for (int b : order) zsum[b] = cert.z[b] + (cert.blossom_parent[b] < 0 ? 0 : zsum[cert.blossom_parent[b]]);

  std::vector<long> members(nb, 0), inside(nb, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (cert.vertex_blossom[v] >= 0) ++members[cert.vertex_blossom[v]];
  }

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const bool matched = cert.matching.is_matched_edge(e, ed.u);
    const int common = lca(cert.vertex_blossom[ed.u], cert.vertex_blossom[ed.v]);
    const long lhs = cert.y[ed.u] + cert.y[ed.v] + (common < 0 ? 0 : zsum[common]);
    const long w = matched ? 2 : 0;
    if (lhs < w || (matched && lhs != w)) return false;
    if (matched && common >= 0) ++inside[common];
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int p = cert.blossom_parent[*it];
    if (p >= 0) {
      members[p] += members[*it];
      inside[p] += inside[*it];
    }
  }
  for (int b = 0; b < nb; ++b) {
    if (members[b] == 0) throw CertificateError("empty blossom");
    if (members[b] - 2 * inside[b] != 1) return false;
  }

  long first = 0, second = 0;
  int free_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!cert.matching.is_free(v)) continue;
    long y = cert.y[v];
    if (free_count == 0 || y > first) {
      second = first;
      first = y;
    } else if (free_count == 1 || y > second) {
      second = y;
    }
    ++free_count;
  }
  if (free_count >= 2 && first + second > 1L - n) return false;
  return true;
}

}  // namespace gmatch
