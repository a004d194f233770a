#pragma once
// Independent brute-force reference implementations. None of these call into
// the library beyond Graph::adjacent / order, so they can serve as ground truth.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "specgraph/graph.hpp"

namespace oracle {

using specgraph::Graph;

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) a[u][v] = (u != v && g.adjacent(u, v)) ? 1 : 0;
  return a;
}

/// Largest subset whose members are pairwise adjacent (n <= 20).
inline std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1U) && (s >> v & 1U) && !g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Complete multipartite iff no three vertices induce exactly one edge.
inline bool is_complete_multipartite(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
        if (e == 1) return false;
      }
  return true;
}

/// Simple cycle on exactly r vertices, by trying every ordered r-tuple.
inline bool has_cycle(const Graph& g, std::size_t r) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) ok = g.adjacent(perm[i], perm[(i + 1) % r]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::int64_t triangles(const Graph& g) {
  const std::size_t n = g.order();
  std::int64_t t = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) t += g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c);
  return t;
}

inline bool is_regular(const Graph& g) {
  const auto a = adjacency(g);
  const int d0 = std::accumulate(a[0].begin(), a[0].end(), 0);
  return std::all_of(a.begin(), a.end(), [&](const auto& row) { return std::accumulate(row.begin(), row.end(), 0) == d0; });
}

/// Determinant by cofactor expansion along the first row.
inline long double determinant(const std::vector<std::vector<long double>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1.0L;
  if (n == 1) return m[0][0];
  long double det = 0.0L;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0.0L) continue;
    std::vector<std::vector<long double>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long double> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    det += ((j % 2 == 0) ? 1.0L : -1.0L) * m[0][j] * determinant(minor);
  }
  return det;
}

/// Number of eigenvalues below x: sign changes in the leading principal
/// minors of (M - xI) (Sylvester inertia).
inline std::size_t count_below(const std::vector<std::vector<long double>>& m, long double x) {
  const std::size_t n = m.size();
  std::size_t changes = 0;
  long double prev = 1.0L;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<long double>> lead(k, std::vector<long double>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j] - (i == j ? x : 0.0L);
    long double d = determinant(lead);
    if (d == 0.0L) d = -prev * 1e-30L;  // measure-zero tie: nudge as if x were slightly larger
    if ((d < 0) != (prev < 0)) ++changes;
    prev = d;
  }
  return changes;
}

/// Ascending eigenvalues of a small symmetric matrix by bisection on count_below.
inline std::vector<double> eigenvalues_by_bisection(const std::vector<std::vector<long double>>& m) {
  const std::size_t n = m.size();
  long double bound = 1.0L;
  for (const auto& row : m)
    for (long double v : row) bound += std::fabs(v);
  std::vector<double> out;
  for (std::size_t k = 1; k <= n; ++k) {
    long double lo = -bound, hi = bound;
    for (int it = 0; it < 200; ++it) {
      // An off-centre split keeps probes away from the small rationals where leading minors vanish.
      const long double mid = lo + (hi - lo) * 0.41421356237309504880L;
      if (count_below(m, mid) >= k) hi = mid;
      else lo = mid;
    }
    out.push_back(static_cast<double>((lo + hi) / 2));
  }
  return out;
}

inline std::vector<std::vector<long double>> adjacency_ld(const Graph& g) {
  const auto a = adjacency(g);
  std::vector<std::vector<long double>> m(a.size(), std::vector<long double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j];
  return m;
}

inline std::vector<std::vector<long double>> laplacian_ld(const Graph& g) {
  auto m = adjacency_ld(g);
  for (std::size_t i = 0; i < m.size(); ++i) {
    long double d = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      d += m[i][j];
      m[i][j] = -m[i][j];
    }
    m[i][i] = d;
  }
  return m;
}

/// Lexicographically smallest upper-triangle adjacency string over all relabelings.
inline std::vector<int> canonical_string(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> s;
    for (std::size_t v = 1; v < n; ++v)
      for (std::size_t u = 0; u < v; ++u) s.push_back(g.adjacent(perm[u], perm[v]) ? 1 : 0);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph cycle(std::size_t n) {
  std::vector<specgraph::Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<specgraph::Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<specgraph::Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

inline Graph petersen() {
  std::vector<specgraph::Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edge_list(10, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<specgraph::Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, e);
}

}  // namespace oracle
