#include <doctest.h>

#include <random>

#include "gmatch/driver.hpp"
#include "gmatch/generate.hpp"
#include "gmatch/oracle.hpp"
#include "support.hpp"

using namespace gmatch;
using namespace gmatch::testing;

namespace {

SolveResult solve_checked(const Graph& g) {
  SolveOptions opts;
  opts.verify = true;
  SolveResult r = maximum_matching(g, opts);
  REQUIRE(validate_matching(g, r.matching));
  CHECK(r.stats.phases <= phase_bound(g.num_vertices()));
  CHECK(check_certificate(g, make_certificate(r.final_search, r.matching)));
  return r;
}

}  // namespace

TEST_CASE("small named graphs") {
  CHECK(solve_checked(path_graph(4)).matching.size() == 2);
  CHECK(solve_checked(cycle_graph(5)).matching.size() == 2);
  CHECK(solve_checked(cycle_graph(6)).matching.size() == 3);
  CHECK(solve_checked(complete_graph(4)).matching.size() == 2);
  CHECK(solve_checked(cycle_graph(7)).matching.size() == 3);
  CHECK(solve_checked(petersen()).matching.size() == 5);
  CHECK(solve_checked(Graph(0, {})).matching.size() == 0);
  CHECK(solve_checked(Graph(5, {})).matching.size() == 0);
}

TEST_CASE("phase_bound") {
  CHECK(phase_bound(1) == 4);
  CHECK(phase_bound(16) == 10);
  CHECK(phase_bound(17) == 12);
}

TEST_CASE("random graphs agree with brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    Graph g = random_graph(rng, n, static_cast<int>(rng() % 41));
    SolveResult r = solve_checked(g);
    REQUIRE(r.matching.size() == brute_max_matching(g).size);
  }
}

TEST_CASE("phase statistics and monotone path lengths") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 40 + static_cast<int>(rng() % 60), 200);
    int seen = 0, last = 0, total_paths = 0;
    SolveOptions opts;
    opts.verify = true;
    opts.observer = [&](const PhaseView& v) {
      ++seen;
      CHECK(!v.paths.empty());
      CHECK(v.paths.front().length() > last);
      last = v.paths.front().length();
      total_paths += static_cast<int>(v.paths.size());
    };
    SolveResult r = maximum_matching(g, opts);
    CHECK(seen == static_cast<int>(r.stats.per_phase.size()));
    CHECK(r.stats.phases == seen + 1);
    CHECK(total_paths == r.matching.size());
    CHECK(r.stats.matched_edges == r.matching.size());
    for (std::size_t i = 0; i < r.stats.per_phase.size(); ++i) {
      const PhaseRecord& rec = r.stats.per_phase[i];
      CHECK(rec.path_length == 2 * rec.delta_final - 1);
      if (i) CHECK(rec.path_length > r.stats.per_phase[i - 1].path_length);
    }
  }
}

TEST_CASE("warm start and idempotence") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 30), 60);
    Matching warm = random_matching(rng, g);
    SolveResult a = maximum_matching(g, warm, {true, nullptr, {}});
    SolveResult b = maximum_matching(g);
    CHECK(a.matching.size() == b.matching.size());
    SolveResult again = maximum_matching(g, b.matching);
    CHECK(again.stats.phases == 1);
    CHECK(again.matching == b.matching);
  }
  Graph g = path_graph(3);
  CHECK_THROWS(maximum_matching(g, Matching::from_mates(g, {2, kNoVertex, 0})));
}

TEST_CASE("generator families") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph chain = generate(GraphKind::LongPathChain, 101, 0, seed);
    CHECK(solve_checked(chain).matching.size() == 50);
    Graph gadget = generate(GraphKind::NestedBlossomGadget, 19, 3, seed);
    CHECK(solve_checked(gadget).matching.size() == brute_max_matching(gadget).size);
    Graph bip = generate(GraphKind::RandomBipartite, 200, 500, seed);
    solve_checked(bip);
  }
}
