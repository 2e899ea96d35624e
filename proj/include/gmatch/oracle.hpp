#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch {

struct SearchOutcome;

/// Brute-force checks refuse inputs above their size guard.
class OracleRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxMatchingOracleVertices = 20;
inline constexpr int kMaxPathOracleVertices = 14;

struct BruteMatching {
  int size = 0;
  Matching witness;
};

/// Exact maximum matching by branching on the highest-degree vertex (match it
/// to each neighbour, or leave it single), pruned by half the number of
/// non-isolated vertices.
BruteMatching brute_max_matching(const Graph& g);

/// Augmenting paths as vertex sequences, oriented so front() < back().
struct SapSet {
  int length = 0;
  std::vector<std::vector<Vertex>> paths;  // sorted, unique
};

/// Every shortest augmenting path, or nullopt when m is maximum.
std::optional<SapSet> brute_saps(const Graph& g, const Matching& m);

/// Every augmenting path of any length (same orientation convention).
std::vector<std::vector<Vertex>> enumerate_augmenting_paths(const Graph& g, const Matching& m);

/// True iff `paths` are pairwise vertex-disjoint shortest augmenting paths and
/// every shortest augmenting path meets one of them.
bool verify_sap_set_maximal(const Graph& g, const Matching& m, const std::vector<Path>& paths);

/// LP dual solution for the weights w(e) = 2 on matched edges, 0 elsewhere.
/// Blossoms form a forest: blossom_parent[b] is the enclosing blossom or -1,
/// vertex_blossom[v] the innermost blossom holding v or -1.
struct Certificate {
  std::vector<long> y;
  std::vector<int> blossom_parent;
  std::vector<int> vertex_blossom;
  std::vector<long> z;
  Matching matching;
};

Certificate make_certificate(const SearchOutcome& outcome, const Matching& m);

/// True iff the duals dominate every edge, are tight on matched edges, every
/// blossom has z >= 0 even and exactly one vertex not matched inside it, and
/// the free-vertex duals are low enough that no augmenting path can exist
/// (y(f) + y(f') <= 1 - n for every pair of free vertices). Throws
/// CertificateError for a malformed blossom family.
bool check_certificate(const Graph& g, const Certificate& cert);

}  // namespace gmatch
