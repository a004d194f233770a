#include "specgraph/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "specgraph/random.hpp"

namespace specgraph {

namespace {

Edge pair_from_index(std::uint64_t k) {
  auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (j * (j - 1) / 2 > k) --j;
  while ((j + 1) * j / 2 <= k) ++j;
  return {static_cast<Vertex>(k - j * (j - 1) / 2), static_cast<Vertex>(j)};
}

}  // namespace

Graph complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite: empty part list");
  if (std::find(parts.begin(), parts.end(), std::size_t{0}) != parts.end())
    throw std::invalid_argument("complete_multipartite: parts must be positive");
  const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  std::vector<std::size_t> part_of;
  part_of.reserve(n);
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph turan_graph(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw std::invalid_argument("turan_graph: need 1 <= r <= n");
  std::vector<std::size_t> parts(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++parts[i];
  return complete_multipartite(parts);
}

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (n == 0) throw std::invalid_argument("random_gnm: n must be positive");
  if (m > pairs) throw std::invalid_argument("random_gnm: m exceeds n(n-1)/2");

  // Floyd's subset sampling over pair indices; sample the non-edges when denser.
  const bool sample_absent = m > pairs / 2;
  const std::uint64_t k = sample_absent ? pairs - m : m;
  SplitMix64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(k * 2);
  for (std::uint64_t j = pairs - k; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  if (sample_absent) {
    for (std::uint64_t idx = 0; idx < pairs; ++idx)
      if (!chosen.contains(idx)) edges.push_back(pair_from_index(idx));
  } else {
    for (auto idx : chosen) edges.push_back(pair_from_index(idx));
  }
  return Graph::from_edge_list(n, edges);
}

std::uint64_t labeled_graph_count(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("full enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

std::vector<EnumerationRange> split_range(std::size_t n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("split_range: k must be positive");
  const std::uint64_t total = labeled_graph_count(n);
  std::vector<EnumerationRange> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t start = total * i / k;
    const std::uint64_t end = total * (i + 1) / k;
    out.push_back({n, start, end});
  }
  return out;
}

void enumerate_range(const EnumerationRange& range, const std::function<void(const Graph&)>& visit) {
  if (range.end > labeled_graph_count(range.n) || range.start > range.end)
    throw std::invalid_argument("enumerate_range: range outside mask space");
  for (std::uint64_t mask = range.start; mask < range.end; ++mask) visit(graph_from_mask(range.n, mask));
}

void enumerate_labeled(std::size_t n, const std::function<void(const Graph&)>& visit) {
  enumerate_range({n, 0, labeled_graph_count(n)}, visit);
}

std::uint64_t canonical_mask(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxEnumerationOrder) throw std::invalid_argument("canonical_mask: n too large");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i, ++k)
        if (g.adjacent(perm[i], perm[j])) mask |= std::uint64_t{1} << k;
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace specgraph
