// gmatch: solve, generate and benchmark maximum matching instances.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmatch/dimacs.hpp"
#include "gmatch/driver.hpp"
#include "gmatch/generate.hpp"
#include "gmatch/oracle.hpp"

namespace {

using namespace gmatch;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kInvariant = 3 };

// Per-step dual and DFS instrumentation is quadratic; above this size --verify
// keeps only the final checks.
constexpr int kInstrumentedLimit = 5000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int solve(const std::string& file, bool verify, const std::string& trace_path, bool show_stats) {
  const Graph g = parse_dimacs(read_file(file));
  std::ofstream trace_out;
  std::optional<TraceSink> sink;
  if (!trace_path.empty()) {
    trace_out.open(trace_path);
    if (!trace_out) throw UsageError("cannot write " + trace_path);
    sink.emplace(trace_out);
  }
  SolveOptions opts;
  opts.verify = verify && g.num_vertices() <= kInstrumentedLimit;
  opts.trace = sink ? &*sink : nullptr;
  SolveResult r = maximum_matching(g, opts);

  if (verify) {
    if (!validate_matching(g, r.matching)) throw InvariantViolation("result is not a matching");
    if (!check_certificate(g, make_certificate(r.final_search, r.matching))) {
      throw InvariantViolation("optimality certificate rejected");
    }
    if (g.num_vertices() <= kMaxMatchingOracleVertices &&
        brute_max_matching(g).size != r.matching.size()) {
      throw InvariantViolation("matching size disagrees with brute force");
    }
  }
  std::cout << emit_solution(r.matching, show_stats ? &r.stats : nullptr);
  if (verify) std::cout << "c verified\n";
  return kOk;
}

int gen(const std::string& kind, int n, long m, std::uint64_t seed, const std::string& out_path) {
  GraphKind k;
  try {
    k = parse_kind(kind);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  Graph g;
  try {
    g = generate(k, n, m, seed);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  const std::string text = emit_dimacs(g);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
  return kOk;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

int bench(const std::vector<std::string>& sizes, std::uint64_t seed, const std::string& kind,
          double density) {
  GraphKind k;
  try {
    k = parse_kind(kind);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  std::cout << "kind\tn\tm\tseed\tphases\tmatched\tmedian_phase_s\tmax_phase_s\tphase_times_s\ttotal_s\n";
  for (const std::string& entry : sizes) {
    int n = 0;
    long m = 0;
    const auto colon = entry.find(':');
    try {
      n = std::stoi(entry.substr(0, colon));
      m = colon == std::string::npos ? static_cast<long>(density * n) : std::stol(entry.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad size '" + entry + "', expected N or N:M");
    }
    Graph g;
    try {
      g = generate(k, n, m, seed);
    } catch (const GraphError& e) {
      throw UsageError(e.what());
    }
    const SolveResult r = maximum_matching(g);
    std::vector<double> times;
    for (const PhaseRecord& p : r.stats.per_phase) times.push_back(p.seconds);
    std::ostringstream list;
    for (std::size_t i = 0; i < times.size(); ++i) list << (i ? "," : "") << times[i];
    std::cout << kind << '\t' << g.num_vertices() << '\t' << g.num_edges() << '\t' << seed << '\t'
              << r.stats.phases << '\t' << r.matching.size() << '\t' << median(times) << '\t'
              << (times.empty() ? 0.0 : *std::max_element(times.begin(), times.end())) << '\t'
              << (times.empty() ? "-" : list.str()) << '\t' << r.stats.total_seconds << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum cardinality matching for general graphs"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve a DIMACS edge instance");
  std::string solve_file, trace_path;
  bool verify = false, show_stats = false;
  solve_cmd->add_option("file", solve_file, "Instance file")->required();
  solve_cmd->add_flag("--verify", verify, "Run invariant, certificate and oracle checks");
  solve_cmd->add_option("--trace", trace_path, "Write JSON-lines step trace to this file");
  solve_cmd->add_flag("--stats", show_stats, "Append per-phase statistics as comments");

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  std::string kind, out_path;
  int n = 0;
  long m = 0;
  std::uint64_t seed = 1;
  gen_cmd->add_option("kind", kind,
                      "random-gnm | random-bipartite | long-path-chain | nested-blossom-gadget")
      ->required();
  gen_cmd->add_option("--n", n, "Vertex count")->required();
  gen_cmd->add_option("--m", m, "Edge count (extra chords for nested-blossom-gadget)");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Time the solver on generated instances");
  std::vector<std::string> sizes;
  std::uint64_t bench_seed = 1;
  std::string bench_kind = "random-gnm";
  double density = 5.0;
  bench_cmd->add_option("--sizes", sizes, "Instance sizes as N or N:M")->required();
  bench_cmd->add_option("--seed", bench_seed, "Random seed");
  bench_cmd->add_option("--kind", bench_kind, "Generator kind");
  bench_cmd->add_option("--density", density, "m = density * n when M is omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return solve(solve_file, verify, trace_path, show_stats);
    if (*gen_cmd) return gen(kind, n, m, seed, out_path);
    if (*bench_cmd) return bench(sizes, bench_seed, bench_kind, density);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const GraphError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
