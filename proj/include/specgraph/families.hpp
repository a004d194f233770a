#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Edges exactly between distinct parts.
Graph complete_multipartite(std::span<const std::size_t> parts);
/// Complete r-partite graph with part sizes differing by at most one.
Graph turan_graph(std::size_t n, std::size_t r);
/// Uniform over labeled graphs on n vertices with exactly m edges; SplitMix64-driven.
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// Half-open range [start, end) of edge masks for labeled graphs of order n.
struct EnumerationRange {
  std::size_t n = 0;
  std::uint64_t start = 0;
  std::uint64_t end = 0;
  friend bool operator==(const EnumerationRange&, const EnumerationRange&) = default;
};

std::uint64_t labeled_graph_count(std::size_t n);

/// Exact partition of the 2^C(n,2) mask space into k contiguous ranges (k >= 1).
std::vector<EnumerationRange> split_range(std::size_t n, std::size_t k);

/// Calls visit for every labeled graph in the range, in mask order.
void enumerate_range(const EnumerationRange& range, const std::function<void(const Graph&)>& visit);
/// Every labeled graph of order n (1 <= n <= 7), in mask order.
void enumerate_labeled(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Isomorphism-invariant key: the minimum edge mask over all vertex
/// permutations (n <= 7).
std::uint64_t canonical_mask(const Graph& g);

}  // namespace specgraph
