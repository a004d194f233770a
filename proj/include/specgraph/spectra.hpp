#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Raised when the Jacobi iteration exceeds its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Spectrum {
  std::vector<double> adjacency_eigs;  // descending
  std::vector<double> laplacian_eigs;  // ascending, first is ~0
  /// Absolute error bound on every eigenvalue: remaining off-diagonal norm
  /// plus a rounding allowance proportional to n * eps * ||M||_F.
  double tol = 0.0;
};

inline constexpr double kJacobiRelativeTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

struct SymmetricEigenResult {
  std::vector<double> values;  // unsorted (diagonal order)
  double off_norm = 0.0;       // final off-diagonal Frobenius norm
  double frobenius = 0.0;      // Frobenius norm of the input
  int sweeps = 0;
};

/// Cyclic Jacobi on a dense row-major n x n symmetric matrix. Stops when the
/// off-diagonal Frobenius norm drops to 1e-12 * ||M||_F (floor 1e-300).
SymmetricEigenResult symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

std::vector<double> adjacency_matrix(const Graph& g);
std::vector<double> laplacian_matrix(const Graph& g);

Spectrum eigenvalues(const Graph& g);
double lambda_max(const Graph& g);
double mu_min(const Graph& g);

/// e(V1, V2) n / (|V1| |V2|) for the partition (v1, complement); never exceeds lambda_n.
double partition_laplacian_bound(const Graph& g, const VertexSet& v1);
/// 2e(V1)/|V1| + 2e(V2)/|V2| - 2m/n; never below mu_n.
double partition_adjacency_bound(const Graph& g, const VertexSet& v1);

}  // namespace specgraph
