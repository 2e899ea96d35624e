#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "gmatch/hgraph.hpp"
#include "gmatch/oracle.hpp"
#include "gmatch/phase1.hpp"
#include "gmatch/phase2.hpp"
#include "support.hpp"

using namespace gmatch;
using namespace gmatch::testing;

TEST_CASE("run_search on a single edge") {
  Graph g = make_graph(2, {{0, 1}});
  SearchOutcome out = run_search(g, Matching(2), {true, nullptr});
  CHECK(out.augmented);
  CHECK(out.delta_final == 1);
  CHECK(out.y == std::vector<int>{0, 0});
}

TEST_CASE("run_search on one vertex is optimal") {
  Graph g(1, {});
  SearchOutcome out = run_search(g, Matching(1), {true, nullptr});
  CHECK_FALSE(out.augmented);
}

TEST_CASE("triangle with one matched edge") {
  // a=0, b=1, c=2, m = {bc}
  Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  Matching m(3);
  m.match(g, 1);
  std::ostringstream trace;
  TraceSink sink(trace);
  SearchOutcome out = run_search(g, m, {true, &sink});
  CHECK_FALSE(out.augmented);
  REQUIRE(out.blossoms.num_blossoms() == 1);
  const BlossomNode& b = out.blossoms.blossom(out.blossoms.blossom_id(0));
  CHECK(b.base == 0);
  CHECK(b.created_at == 2);
  CHECK(out.blossoms.leaves(out.blossoms.blossom_id(0)).size() == 3);
  CHECK(trace.str() ==
        "{\"phase\":1,\"step\":\"grow\",\"delta\":2,\"edge\":0,\"blossom\":-1}\n"
        "{\"phase\":1,\"step\":\"blossom\",\"delta\":2,\"edge\":2,\"blossom\":0}\n");
  CHECK(check_certificate(g, make_certificate(out, m)));
}

TEST_CASE("scan_outer bucket placement") {
  SUBCASE("adjacent free roots land in L(1)") {
    Graph g = make_graph(2, {{0, 1}});
    Phase1Search s(g, Matching(2));
    CHECK(s.bucket(1) == std::vector<EdgeId>{0, 0});
    CHECK(s.bucket(0).empty());
  }
  SUBCASE("outer to unreached lands at slack") {
    // Free 0 joins matched pair 1-2; 3 keeps n large enough for L(2).
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
    Matching m(5);
    m.match(g, 1);
    m.match(g, 2);
    Phase1Search s(g, m);
    CHECK(s.bucket(2) == std::vector<EdgeId>{0});
  }
  SUBCASE("projections past the horizon are dropped") {
    // n = 4: horizon 2. A free vertex next to a matched pair would need L(2)
    // and a later outer-outer edge at L(3) is discarded.
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Matching m(4);
    m.match(g, 1);
    Phase1Search s(g, m);
    CHECK(s.horizon() == 2);
    CHECK(s.bucket(2) == std::vector<EdgeId>{0, 2});
    CHECK(s.bucket(3).empty());
  }
}

TEST_CASE("grow step duals") {
  // f=0 - a=1 = a'=2, with a second free vertex far away so the search runs on.
  Graph g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  Matching m(6);
  m.match(g, 1);
  m.match(g, 3);
  Phase1Search s(g, m, {true, nullptr});
  auto ev = s.next_event();
  REQUIRE(ev);
  CHECK(ev->kind == Phase1Search::EventKind::Grow);
  CHECK(s.delta() == 2);
  s.grow_step(ev->x, ev->y, ev->edge);
  CHECK(s.label(1) == Label::Inner);
  CHECK(s.label(2) == Label::Outer);
  CHECK(s.dual(1) == 1);
  CHECK(s.dual(2) == 1);
  CHECK(s.tree_root(2) == 0);
  s.check_duals();
}

TEST_CASE("z accrues 2 per unit of offset while a blossom is maximal") {
  // Free root 0 with pendant triangle 0-1-2 (1-2 matched): blossom at Δ=2.
  // A second free vertex 5 is reachable only through 3-4 so the search keeps
  // adjusting duals.
  Graph g = make_graph(9, {{0, 1}, {1, 2}, {2, 0}, {5, 3}, {3, 4}, {6, 7}, {7, 8}});
  Matching m(9);
  m.match(g, 1);
  m.match(g, 4);
  m.match(g, 6);
  Phase1Search s(g, m, {true, nullptr});
  SearchOutcome out = s.run();
  CHECK_FALSE(out.augmented);
  REQUIRE(out.blossoms.num_blossoms() == 1);
  const int created = out.blossoms.blossom(out.blossoms.blossom_id(0)).created_at;
  CHECK(created == 2);
  CHECK(out.z[0] == 2 * (out.delta_final - created));
}

TEST_CASE("build_H with an empty matching is G") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 10), 1 + static_cast<int>(rng() % 20));
    if (g.num_edges() == 0) continue;
    Matching m(g.num_vertices());
    SearchOutcome out = run_search(g, m, {true, nullptr});
    REQUIRE(out.augmented);
    CHECK(out.delta_final == 1);
    HGraph h = build_H(g, m, out);
    CHECK(h.graph.num_vertices() == g.num_vertices());
    CHECK(h.graph.num_edges() == g.num_edges());
    for (int y : out.y) CHECK(y == 0);
  }
}

TEST_CASE("build_H contracts positive blossoms") {
  // Triangle 0-1-2 (1-2 matched) hanging off free 0, then 2-3=4-5 with 5 free.
  Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
  Matching m(6);
  m.match(g, 1);
  m.match(g, 4);
  SearchOutcome out = run_search(g, m, {true, nullptr});
  REQUIRE(out.augmented);
  REQUIRE(out.positive.size() == 1);
  HGraph h = build_H(g, m, out);
  CHECK(h.graph.num_vertices() == 4);
  CHECK(h.label[0] == h.label[1]);
  CHECK(h.label[1] == h.label[2]);
  CHECK(h.is_contracted(h.label[0]));
  for (const Edge& e : h.graph.edges()) CHECK(e.u != e.v);
  CHECK_THROWS(build_H(g, m, run_search(g, Matching::from_mates(g, {1, 0, 3, 2, 5, 4}))));
}

namespace {

struct Instance {
  Graph g;
  Matching m;
};

std::vector<Instance> random_instances(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    Graph g = random_graph(rng, n, static_cast<int>(rng() % (2 * n + 2)));
    Matching m = random_matching(rng, g);
    out.push_back({std::move(g), std::move(m)});
  }
  return out;
}

// H image of a G vertex sequence, consecutive repeats collapsed, oriented so
// front < back. nullopt when a contracted vertex is visited non-contiguously.
std::optional<std::vector<Vertex>> h_image(const HGraph& h, const std::vector<Vertex>& path) {
  std::vector<Vertex> out;
  for (Vertex v : path) {
    const Vertex hv = h.label[v];
    if (!out.empty() && out.back() == hv) continue;
    if (std::find(out.begin(), out.end(), hv) != out.end()) return std::nullopt;
    out.push_back(hv);
  }
  if (out.front() > out.back()) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Phase 1 matches the naive reference search") {
  int augmented = 0, optimal = 0;
  for (const Instance& inst : random_instances(21, 1500, 14)) {
    SearchOutcome out = run_search(inst.g, inst.m, {true, nullptr});
    const auto ref = naive_search_offset(inst.g, inst.m);
    REQUIRE(out.augmented == ref.has_value());
    if (ref) {
      CHECK(out.delta_final == *ref);
      ++augmented;
    } else {
      ++optimal;
    }
  }
  CHECK(augmented > 500);
  CHECK(optimal > 50);
}

TEST_CASE("length law, free-dual bound and base-through property") {
  int checked = 0;
  for (const Instance& inst : random_instances(22, 800, 12)) {
    const Graph& g = inst.g;
    const Matching& m = inst.m;
    SearchOutcome out = run_search(g, m, {true, nullptr});
    const auto saps = brute_saps(g, m);
    REQUIRE(out.augmented == saps.has_value());
    if (!saps) continue;
    ++checked;
    CHECK(2 * out.delta_final - 1 == saps->length);
    CHECK(out.delta_final <= g.num_vertices() / 2);

    // w(P) = -2 * |P ∩ M| for an augmenting path; the free duals bound it.
    for (const auto& vs : enumerate_augmenting_paths(g, m)) {
      const int w = -static_cast<int>(vs.size() - 2);
      for (Vertex f = 0; f < g.num_vertices(); ++f) {
        if (m.is_free(f)) CHECK(w <= 2 * out.y[f]);
      }
    }
    // Every sap meets each positive blossom in one even alternating stretch
    // through its base.
    for (NodeId b : out.positive) {
      const auto leaves = out.blossoms.leaves(b);
      const Vertex base = out.blossoms.base_of(b);
      for (const auto& sap : saps->paths) {
        std::vector<int> pos;
        for (int i = 0; i < static_cast<int>(sap.size()); ++i) {
          if (std::find(leaves.begin(), leaves.end(), sap[i]) != leaves.end()) pos.push_back(i);
        }
        if (pos.empty()) continue;
        CHECK(pos.back() - pos.front() + 1 == static_cast<int>(pos.size()));
        CHECK(pos.size() % 2 == 1);
        const bool base_inside = std::any_of(pos.begin(), pos.end(), [&](int i) { return sap[i] == base; });
        CHECK(base_inside);
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("augmenting paths of H are exactly the images of the saps of G") {
  int checked = 0;
  for (const Instance& inst : random_instances(23, 600, 12)) {
    const Graph& g = inst.g;
    const Matching& m = inst.m;
    SearchOutcome out = run_search(g, m, {true, nullptr});
    if (!out.augmented) continue;
    ++checked;
    const HGraph h = build_H(g, m, out);
    const auto saps = brute_saps(g, m);
    REQUIRE(saps);
    std::set<std::vector<Vertex>> images;
    for (const auto& sap : saps->paths) {
      auto img = h_image(h, sap);
      REQUIRE(img);
      images.insert(*img);
    }
    std::set<std::vector<Vertex>> h_paths;
    for (const auto& hp : enumerate_augmenting_paths(h.graph, h.matching)) h_paths.insert(hp);
    CHECK(images == h_paths);

    // Every H path expands to a sap of G.
    std::set<std::vector<Vertex>> sap_set(saps->paths.begin(), saps->paths.end());
    for (const auto& hp : h_paths) {
      Path p = alternating_path_from_vertices(h.graph, h.matching, hp);
      REQUIRE(is_augmenting(h.graph, h.matching, p));
      Path gp = expand_path(p, h, g, out.blossoms);
      CHECK(is_augmenting(g, m, gp));
      std::vector<Vertex> key = gp.vertices;
      if (key.front() > key.back()) std::reverse(key.begin(), key.end());
      CHECK(sap_set.count(key) == 1);
    }
  }
  CHECK(checked > 200);
}
