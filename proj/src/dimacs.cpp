#include "gmatch/dimacs.hpp"

#include <charconv>
#include <sstream>

namespace gmatch {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long to_long(std::string_view s, int line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

// Calls fn(line_number, fields) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  int line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;
    fn(line_no, fields);
  }
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  long n = -1, m = -1;
  std::vector<Edge> edges;
  int last_line = 0;
  for_each_record(text, [&](int line, const std::vector<std::string_view>& f) {
    last_line = line;
    if (f[0] == "p") {
      if (n >= 0) throw ParseError(line, "duplicate header");
      if (f.size() != 4 || f[1] != "edge") throw ParseError(line, "malformed header");
      n = to_long(f[2], line, "vertex count");
      m = to_long(f[3], line, "edge count");
      if (n < 0 || m < 0 || n > 1'000'000'000) throw ParseError(line, "malformed header");
      edges.reserve(static_cast<std::size_t>(std::min<long>(m, 50'000'000)));
    } else if (f[0] == "e") {
      if (n < 0) throw ParseError(line, "edge before header");
      if (f.size() != 3) throw ParseError(line, "malformed edge line");
      long u = to_long(f[1], line, "vertex id");
      long v = to_long(f[2], line, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line, "vertex id out of range");
      if (u == v) throw ParseError(line, "self-loop");
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError(line, "unknown record '" + std::string(f[0]) + "'");
    }
  });
  if (n < 0) throw ParseError(last_line + 1, "missing header");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(last_line, "header announces " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

std::string emit_solution(const Matching& m, const SolveStats* stats) {
  std::ostringstream out;
  out << "s " << m.size() << '\n';
  for (const auto& [e, id] : m.pairs()) out << "m " << e.u + 1 << ' ' << e.v + 1 << '\n';
  if (stats) {
    out << "c phases=" << stats->phases << " total_seconds=" << stats->total_seconds << '\n';
    for (std::size_t i = 0; i < stats->per_phase.size(); ++i) {
      const PhaseRecord& r = stats->per_phase[i];
      out << "c phase=" << i + 1 << " delta=" << r.delta_final << " paths=" << r.num_paths
          << " length=" << r.path_length << " seconds=" << r.seconds << '\n';
    }
  }
  return out.str();
}

Matching parse_solution(const Graph& g, std::string_view text) {
  const int n = g.num_vertices();
  std::vector<Vertex> mates(n, kNoVertex);
  long declared = -1, pairs = 0;
  for_each_record(text, [&](int line, const std::vector<std::string_view>& f) {
    if (f[0] == "s") {
      if (f.size() != 2) throw ParseError(line, "malformed size line");
      declared = to_long(f[1], line, "size");
    } else if (f[0] == "m") {
      if (f.size() != 3) throw ParseError(line, "malformed pair line");
      long u = to_long(f[1], line, "vertex id"), v = to_long(f[2], line, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n || u == v) throw ParseError(line, "bad pair");
      if (mates[u - 1] != kNoVertex || mates[v - 1] != kNoVertex) {
        throw ParseError(line, "vertex matched twice");
      }
      mates[u - 1] = static_cast<Vertex>(v - 1);
      mates[v - 1] = static_cast<Vertex>(u - 1);
      ++pairs;
    } else {
      throw ParseError(line, "unknown record '" + std::string(f[0]) + "'");
    }
  });
  if (declared != pairs) throw ParseError(0, "size line disagrees with pair count");
  return Matching::from_mates(g, std::move(mates));
}

}  // namespace gmatch
