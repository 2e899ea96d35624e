#include "gmatch/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace gmatch {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Adds up to `count` new distinct edges drawn by `draw` into `edges`.
template <typename Draw>
void add_distinct(std::vector<Edge>& edges, std::unordered_set<std::uint64_t>& seen, long count,
                  Draw&& draw) {
  const std::size_t target = edges.size() + static_cast<std::size_t>(count);
  while (edges.size() < target) {
    auto [u, v] = draw();
    if (u == v || !seen.insert(pair_key(u, v)).second) continue;
    edges.push_back({u, v});
  }
}

}  // namespace

GraphKind parse_kind(std::string_view name) {
  if (name == "random-gnm") return GraphKind::RandomGnm;
  if (name == "random-bipartite") return GraphKind::RandomBipartite;
  if (name == "long-path-chain") return GraphKind::LongPathChain;
  if (name == "nested-blossom-gadget") return GraphKind::NestedBlossomGadget;
  throw GraphError("unknown graph kind '" + std::string(name) + "'");
}

std::string_view kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::RandomGnm: return "random-gnm";
    case GraphKind::RandomBipartite: return "random-bipartite";
    case GraphKind::LongPathChain: return "long-path-chain";
    case GraphKind::NestedBlossomGadget: return "nested-blossom-gadget";
  }
  return "?";
}

Graph generate(GraphKind kind, int n, long m, std::uint64_t seed) {
  if (n < 0) throw GraphError("negative vertex count");
  if (m < 0) throw GraphError("negative edge count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> any(0, std::max(0, n - 1));
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  switch (kind) {
    case GraphKind::RandomGnm: {
      const long cap = static_cast<long>(n) * (n - 1) / 2;
      if (m > cap) throw GraphError("random-gnm: m exceeds n(n-1)/2");
      // Dense requests: sample from the complement when that is cheaper.
      if (m > cap / 2) {
        std::vector<Edge> all;
        all.reserve(cap);
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(m);
        edges = std::move(all);
      } else {
        edges.reserve(m);
        seen.reserve(m * 2);
        add_distinct(edges, seen, m, [&] { return std::pair{any(rng), any(rng)}; });
      }
      break;
    }
    case GraphKind::RandomBipartite: {
      const int left = (n + 1) / 2, right = n / 2;
      if (m > static_cast<long>(left) * right) throw GraphError("random-bipartite: m exceeds |L||R|");
      if (m > 0) {
        std::uniform_int_distribution<Vertex> l(0, left - 1), r(left, n - 1);
        edges.reserve(m);
        seen.reserve(m * 2);
        add_distinct(edges, seen, m, [&] { return std::pair{l(rng), r(rng)}; });
      }
      break;
    }
    case GraphKind::LongPathChain: {
      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int i = 0; i + 1 < n; ++i) edges.push_back({order[i], order[i + 1]});
      break;
    }
    case GraphKind::NestedBlossomGadget: {
      if (n < 3 || n % 2 == 0) throw GraphError("nested-blossom-gadget: n must be odd and >= 3");
      const long base = 3 + 3L * ((n - 3) / 2);
      if (m > static_cast<long>(n) * (n - 1) / 2 - base) {
        throw GraphError("nested-blossom-gadget: too many extra chords");
      }
      auto add = [&](Vertex u, Vertex v) {
        if (seen.insert(pair_key(u, v)).second) edges.push_back({u, v});
      };
      add(0, 1);
      add(1, 2);
      add(2, 0);
      // Each round closes the odd cycle hook-a-b-anchor, where hook is one of
      // the two newest vertices, so successive cycles share vertices and the
      // blossoms formed on them nest.
      for (Vertex a = 3; a + 1 < n; a += 2) {
        const Vertex b = a + 1;
        const Vertex hook = a - 1 - static_cast<Vertex>(rng() % 2);
        const Vertex anchor = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(a));
        add(hook, a);
        add(a, b);
        add(b, anchor);
      }
      add_distinct(edges, seen, m, [&] { return std::pair{any(rng), any(rng)}; });
      break;
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace gmatch
