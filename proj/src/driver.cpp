#include "gmatch/driver.hpp"

#include <chrono>
#include <cmath>
#include <string>

namespace gmatch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void fail(const std::string& what) { throw InvariantViolation("driver: " + what); }

}  // namespace

int phase_bound(int num_vertices) {
  int root = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(num_vertices))));
  return 2 * root + 2;
}

SolveResult maximum_matching(const Graph& g, const SolveOptions& options) {
  return maximum_matching(g, Matching(g.num_vertices()), options);
}

SolveResult maximum_matching(const Graph& g, Matching warm_start, const SolveOptions& options) {
  if (!validate_matching(g, warm_start)) throw std::invalid_argument("maximum_matching: invalid warm start");
  const auto start = Clock::now();
  SolveResult result{std::move(warm_start), {}, {}};
  Matching& m = result.matching;
  SolveStats& stats = result.stats;

  const SearchOptions search_options{options.verify, options.trace};
  const Phase2Options ap_options{options.verify, options.trace};
  int last_length = 0;
  for (;;) {
    const auto phase_start = Clock::now();
    ++stats.phases;
    SearchOutcome search = run_search(g, m, search_options);
    if (!search.augmented) {
      result.final_search = std::move(search);
      break;
    }

    HGraph h = build_H(g, m, search);
    Phase2Result ap = find_ap_set(h.graph, h.matching, ap_options);
    std::vector<Path> paths = expand_paths(ap.path_set, h, g, search.blossoms);
    if (paths.empty()) fail("augmenting search produced no paths");
    const int expected = 2 * search.delta_final - 1;

    if (options.verify) {
      for (const Path& p : paths) {
        if (!is_augmenting(g, m, p)) fail("expanded path is not augmenting");
        if (p.length() != expected) fail("expanded path has length " + std::to_string(p.length()));
      }
      if (expected <= last_length) fail("shortest augmenting path length did not increase");
    }
    if (options.observer) options.observer(PhaseView{g, m, search, h, ap, paths});

    const Matching before = options.verify ? m : Matching();
    for (const Path& p : paths) augment_in_place(g, m, p);
    if (options.verify) {
      if (!validate_matching(g, m)) fail("augmented matching is invalid");
      if (!matched_edges_tight(g, before, m, search)) fail("matched edge not tight after augment");
      if (stats.phases > phase_bound(g.num_vertices())) fail("phase count exceeds bound");
    }
    last_length = expected;
    stats.per_phase.push_back({search.delta_final, static_cast<int>(paths.size()), expected,
                               seconds_since(phase_start)});
  }
  if (options.verify && stats.phases > phase_bound(g.num_vertices())) fail("phase count exceeds bound");
  stats.matched_edges = m.size();
  stats.total_seconds = seconds_since(start);
  return result;
}

}  // namespace gmatch
