#include "specgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace specgraph {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * s);
}

void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a[r * n + p];
    const double arq = a[r * n + q];
    const double new_rp = c * arp - s * arq;
    const double new_rq = s * arp + c * arq;
    a[r * n + p] = new_rp;
    a[p * n + r] = new_rp;
    a[r * n + q] = new_rq;
    a[q * n + r] = new_rq;
  }
}

void require_proper_subset(const Graph& g, const VertexSet& v1) {
  if (v1.universe() != g.order()) throw std::invalid_argument("partition: vertex set universe mismatch");
  const std::size_t k = v1.count();
  if (k == 0 || k == g.order()) throw std::invalid_argument("partition: V1 must be nonempty and proper");
}

}  // namespace

SymmetricEigenResult symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("symmetric_eigenvalues: matrix size mismatch");
  SymmetricEigenResult out;
  double fro = 0.0;
  for (double x : a) fro += x * x;
  out.frobenius = std::sqrt(fro);
  const double threshold = std::max(kJacobiRelativeTolerance * out.frobenius, 1e-300);

  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  while (off > threshold) {
    if (sweep == kJacobiMaxSweeps)
      throw ConvergenceError("Jacobi iteration did not converge within " + std::to_string(kJacobiMaxSweeps) +
                             " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a[p * n + q] != 0.0) rotate(a, n, p, q);
    ++sweep;
    off = off_diagonal_norm(a, n);
  }
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  out.off_norm = off;
  out.sweeps = sweep;
  return out;
}

std::vector<double> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (auto [u, v] : g.edges()) {
    a[u * n + v] = 1.0;
    a[v * n + u] = 1.0;
  }
  return a;
}

std::vector<double> laplacian_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> l(n * n, 0.0);
  for (auto [u, v] : g.edges()) {
    l[u * n + v] = -1.0;
    l[v * n + u] = -1.0;
  }
  for (Vertex u = 0; u < n; ++u) l[u * n + u] = static_cast<double>(g.degree(u));
  return l;
}

Spectrum eigenvalues(const Graph& g) {
  const std::size_t n = g.order();
  const double rounding = 8.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();

  auto adj = symmetric_eigenvalues(adjacency_matrix(g), n);
  auto lap = symmetric_eigenvalues(laplacian_matrix(g), n);

  Spectrum s;
  s.adjacency_eigs = std::move(adj.values);
  s.laplacian_eigs = std::move(lap.values);
  std::sort(s.adjacency_eigs.begin(), s.adjacency_eigs.end(), std::greater<>());
  std::sort(s.laplacian_eigs.begin(), s.laplacian_eigs.end());
  s.tol = std::max(adj.off_norm + rounding * adj.frobenius, lap.off_norm + rounding * lap.frobenius);
  return s;
}

double lambda_max(const Graph& g) { return eigenvalues(g).laplacian_eigs.back(); }

double mu_min(const Graph& g) { return eigenvalues(g).adjacency_eigs.back(); }

double partition_laplacian_bound(const Graph& g, const VertexSet& v1) {
  require_proper_subset(g, v1);
  const VertexSet v2 = ~v1;
  const double cut = static_cast<double>(edges_between(g, v1, v2));
  const double k1 = static_cast<double>(v1.count());
  const double k2 = static_cast<double>(v2.count());
  return cut * static_cast<double>(g.order()) / (k1 * k2);
}

double partition_adjacency_bound(const Graph& g, const VertexSet& v1) {
  require_proper_subset(g, v1);
  const VertexSet v2 = ~v1;
  const double k1 = static_cast<double>(v1.count());
  const double k2 = static_cast<double>(v2.count());
  const double e1 = static_cast<double>(edges_within(g, v1));
  const double e2 = static_cast<double>(edges_within(g, v2));
  return 2.0 * e1 / k1 + 2.0 * e2 / k2 - 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
}

}  // namespace specgraph
