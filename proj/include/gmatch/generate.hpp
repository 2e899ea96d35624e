#pragma once

#include <cstdint>
#include <string_view>

#include "gmatch/graph.hpp"

namespace gmatch {

enum class GraphKind { RandomGnm, RandomBipartite, LongPathChain, NestedBlossomGadget };

/// Parses "random-gnm", "random-bipartite", "long-path-chain" or
/// "nested-blossom-gadget"; throws GraphError otherwise.
GraphKind parse_kind(std::string_view name);
std::string_view kind_name(GraphKind kind);

/// Deterministic for a fixed seed.
///  random-gnm: m distinct edges chosen uniformly.
///  random-bipartite: m distinct edges between halves of sizes ceil(n/2), floor(n/2).
///  long-path-chain: the path 0-1-...-(n-1), vertices relabelled by the seed;
///    m is ignored.
///  nested-blossom-gadget: a triangle, then (n-3)/2 rounds that each add two
///    vertices closing an odd cycle through an earlier vertex; n must be odd
///    and at least 3, m extra random chords are added on top.
/// Throws GraphError on infeasible parameters.
Graph generate(GraphKind kind, int n, long m, std::uint64_t seed);

}  // namespace gmatch
