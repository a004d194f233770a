#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "specgraph/families.hpp"
#include "specgraph/random.hpp"
#include "specgraph/spectra.hpp"

using namespace specgraph;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("complete graph spectra") {
  const Spectrum s = eigenvalues(oracle::complete(3));
  CHECK(near(s.laplacian_eigs[0], 0, 1e-10));
  CHECK(near(s.laplacian_eigs[1], 3, 1e-10));
  CHECK(near(s.laplacian_eigs[2], 3, 1e-10));
  CHECK(near(s.adjacency_eigs[0], 2, 1e-10));
  CHECK(near(s.adjacency_eigs[1], -1, 1e-10));
  CHECK(near(s.adjacency_eigs[2], -1, 1e-10));
  CHECK(near(lambda_max(oracle::complete(5)), 5, 1e-10));
  for (std::size_t n = 2; n <= 30; ++n) {
    CHECK(near(lambda_max(oracle::complete(n)), static_cast<double>(n), 1e-8));
    CHECK(near(mu_min(oracle::complete(n)), -1, 1e-8));
  }
}

TEST_CASE("cycle spectra follow the circulant formula") {
  const Spectrum c4 = eigenvalues(oracle::cycle(4));
  const double want_a[] = {2, 0, 0, -2};
  const double want_l[] = {0, 2, 2, 4};
  for (int i = 0; i < 4; ++i) {
    CHECK(near(c4.adjacency_eigs[i], want_a[i], 1e-10));
    CHECK(near(c4.laplacian_eigs[i], want_l[i], 1e-10));
  }
  for (std::size_t n = 3; n <= 40; ++n) {
    std::vector<double> want;
    for (std::size_t k = 0; k < n; ++k) want.push_back(2 * std::cos(2 * std::numbers::pi * k / n));
    std::sort(want.begin(), want.end(), std::greater<>());
    const Spectrum s = eigenvalues(oracle::cycle(n));
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(near(s.adjacency_eigs[i], want[i], 1e-8));
      REQUIRE(near(s.laplacian_eigs[i], 2 - want[i], 1e-8));
    }
  }
}

TEST_CASE("Petersen and octahedron") {
  const Spectrum p = eigenvalues(oracle::petersen());
  CHECK(near(p.adjacency_eigs.back(), -2, 1e-8));
  CHECK(near(p.adjacency_eigs.front(), 3, 1e-8));
  CHECK(near(p.laplacian_eigs.back(), 5, 1e-8));
  const std::size_t parts[] = {2, 2, 2};
  const Graph k222 = complete_multipartite(parts);
  CHECK(near(lambda_max(k222), 6, 1e-8));
  CHECK(near(mu_min(k222), -2, 1e-8));
}

TEST_CASE("empty and trivial graphs") {
  CHECK(lambda_max(Graph::empty(4)) == 0.0);
  CHECK(mu_min(Graph::empty(4)) == 0.0);
  const Spectrum s = eigenvalues(Graph::empty(1));
  CHECK(s.adjacency_eigs == std::vector<double>{0.0});
  CHECK(s.laplacian_eigs == std::vector<double>{0.0});
}

TEST_CASE("Jacobi agrees with the characteristic-polynomial oracle for n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_labeled(n, [&](const Graph& g) {
      const Spectrum s = eigenvalues(g);
      const auto a = oracle::eigenvalues_by_bisection(oracle::adjacency_ld(g));  // ascending
      const auto l = oracle::eigenvalues_by_bisection(oracle::laplacian_ld(g));
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(near(s.adjacency_eigs[n - 1 - i], a[i], 1e-8));
        REQUIRE(near(s.laplacian_eigs[i], l[i], 1e-8));
      }
    });
  }
}

TEST_CASE("Jacobi on random dense symmetric matrices") {
  SplitMix64 rng(5);
  for (std::size_t n : {3U, 4U}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<double> m(n * n);
      std::vector<std::vector<long double>> ml(n, std::vector<long double>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          const double v = std::round(20 * rng.uniform() - 10);
          m[i * n + j] = m[j * n + i] = v;
          ml[i][j] = ml[j][i] = v;
        }
      auto res = symmetric_eigenvalues(m, n);
      std::sort(res.values.begin(), res.values.end());
      const auto want = oracle::eigenvalues_by_bisection(ml);
      for (std::size_t i = 0; i < n; ++i) REQUIRE(near(res.values[i], want[i], 1e-8));
      CHECK(res.off_norm <= 1e-12 * res.frobenius + 1e-300);
    }
  }
}

namespace {

void check_spectrum_invariants(const Graph& g) {
  const Spectrum s = eigenvalues(g);
  const std::size_t n = g.order();
  const double nd = static_cast<double>(n);
  REQUIRE(std::is_sorted(s.adjacency_eigs.begin(), s.adjacency_eigs.end(), std::greater<>()));
  REQUIRE(std::is_sorted(s.laplacian_eigs.begin(), s.laplacian_eigs.end()));
  double sum_a = 0, sum_l = 0;
  for (double v : s.adjacency_eigs) sum_a += v;
  for (double v : s.laplacian_eigs) sum_l += v;
  const double two_m = 2.0 * static_cast<double>(g.size());
  REQUIRE(std::abs(sum_a) <= nd * 1e-9);
  REQUIRE(std::abs(sum_l - two_m) <= nd * 1e-9);
  REQUIRE(std::abs(sum_a) <= s.tol * nd);
  REQUIRE(std::abs(sum_l - two_m) <= s.tol * nd);
  REQUIRE(std::abs(s.laplacian_eigs.front()) <= s.tol);
  const double dmax = static_cast<double>(g.max_degree());
  REQUIRE(s.laplacian_eigs.back() <= 2 * dmax + s.tol);
  REQUIRE(s.adjacency_eigs.back() >= -dmax - s.tol);
  if (n >= 2) REQUIRE(s.adjacency_eigs.back() <= s.tol);
  if (g.size() >= 1) REQUIRE(s.laplacian_eigs.back() >= dmax + 1 - s.tol);
}

}  // namespace

TEST_CASE("spectrum invariants on every labeled graph up to six vertices") {
  for (std::size_t n = 1; n <= 6; ++n) enumerate_labeled(n, check_spectrum_invariants);
}

TEST_CASE("spectrum invariants on random graphs up to fifty vertices") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 49;
    const std::size_t m = SplitMix64(seed).below(n * (n - 1) / 2 + 1);
    check_spectrum_invariants(random_gnm(n, m, seed));
  }
}

TEST_CASE("partition bounds on the 4-cycle") {
  const Graph c4 = oracle::cycle(4);
  const auto opposite = VertexSet::of(4, {0, 2});
  const auto adjacent = VertexSet::of(4, {0, 1});
  CHECK(near(partition_laplacian_bound(c4, opposite), 4, 1e-12));
  CHECK(near(partition_laplacian_bound(c4, adjacent), 2, 1e-12));
  CHECK(near(partition_adjacency_bound(c4, opposite), -2, 1e-12));
  CHECK(near(partition_adjacency_bound(c4, adjacent), 0, 1e-12));
  const Graph disconnected = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK(partition_laplacian_bound(disconnected, adjacent) == 0.0);
}

TEST_CASE("partition adjacency bound on complete graphs") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Graph k = oracle::complete(n);
    VertexSet v1(n);
    for (std::size_t k1 = 1; k1 < n; ++k1) {
      v1.insert(k1 - 1);
      CHECK(near(partition_adjacency_bound(k, v1), -1, 1e-12));
    }
  }
}

TEST_CASE("partition bounds reject improper parts") {
  const Graph c4 = oracle::cycle(4);
  CHECK_THROWS_AS(partition_laplacian_bound(c4, VertexSet(4)), std::invalid_argument);
  CHECK_THROWS_AS(partition_laplacian_bound(c4, VertexSet::full(4)), std::invalid_argument);
  CHECK_THROWS_AS(partition_adjacency_bound(c4, VertexSet(4)), std::invalid_argument);
  CHECK_THROWS_AS(partition_adjacency_bound(c4, VertexSet::full(5)), std::invalid_argument);
}

TEST_CASE("partition bounds bracket the extreme eigenvalues for every subset, n <= 6") {
  for (std::size_t n = 2; n <= 6; ++n) {
    enumerate_labeled(n, [&](const Graph& g) {
      const Spectrum s = eigenvalues(g);
      for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
        VertexSet v1(n);
        for (std::size_t v = 0; v < n; ++v)
          if (mask >> v & 1U) v1.insert(v);
        REQUIRE(partition_laplacian_bound(g, v1) <= s.laplacian_eigs.back() + 1e-7);
        REQUIRE(partition_adjacency_bound(g, v1) >= s.adjacency_eigs.back() - 1e-7);
      }
    });
  }
}
