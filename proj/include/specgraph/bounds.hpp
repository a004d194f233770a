#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/rational.hpp"
#include "specgraph/spectra.hpp"
#include "specgraph/structure.hpp"

namespace specgraph {

/// Comparison tolerances for inequality checks. These are separate from the
/// eigensolver's own residual so solver error cannot pose as a violation.
struct Tolerances {
  double eq_tol = 1e-7;         // equality band and violation slack
  double strict_margin = 1e-9;  // minimum margin demanded by strict inequalities
};

// ---------------------------------------------------------------------------
// Bound formulas. Integer arguments are n (order), m (size), t (triangles).

/// 2mn / ((r-1)(n^2 - 2m)): lower bound on lambda_n for K_{r+1}-free graphs.
Rational th1_bound(std::int64_t n, std::int64_t m, std::int64_t r);

/// 6nt - (n + lambda_n) sum d^2 + 2nm lambda_n; nonnegative for every graph.
double th2_l1_residual(const DegreeStats& deg, const TriangleStats& tri, double lambda_n);
/// Magnitude used to scale the equality/violation band of th2_l1_residual.
double th2_l1_scale(const DegreeStats& deg, const TriangleStats& tri, double lambda_n);

/// (2m^2 - 3nt) n / (m (n^2 - 2m)): lower bound on lambda_n. Requires m >= 1.
Rational th2_l2_bound(std::int64_t n, std::int64_t m, std::int64_t t);

/// (3n^3 t - 4m^3) / (n m (n^2 - 2m)): upper bound on mu_n. Requires m >= 1.
Rational th3_bound(std::int64_t n, std::int64_t m, std::int64_t t);

/// -(2/r)(2m/n^2)^r n: strict upper bound on mu_n for K_{r+1}-free graphs.
double in1_bound(std::int64_t n, std::int64_t m, std::int64_t r);

enum class CheckStatus { not_applicable, holds, violated };

struct CheckOutcome {
  CheckStatus status = CheckStatus::not_applicable;
  std::optional<double> bound;  // present when the hypothesis holds
  std::optional<double> gap;    // bound - mu_n
};

/// If t n^3 <= eps m^3, require mu_n <= -(1 - eps) 4m^2/n^3 (within tol).
CheckOutcome cor4_check(std::int64_t n, std::int64_t m, std::int64_t t, double epsilon, double mu_n,
                        double tol = 1e-7);
/// Smallest eps for which the triangle-sparsity condition holds: t n^3 / m^3.
Rational cor4_min_epsilon(std::int64_t n, std::int64_t m, std::int64_t t);
/// Bound of the triangle-sparsity check evaluated exactly at eps = t n^3 / m^3.
Rational cor4_bound_at_min_epsilon(std::int64_t n, std::int64_t m, std::int64_t t);

/// If the graph has no cycle of length r, require mu_n <= -4m^2/n^3 + 2(r-3).
CheckOutcome cor5_check(std::int64_t n, std::int64_t m, std::int64_t r, double mu_n, bool has_cycle_r,
                        double tol = 1e-7);
Rational cor5_bound(std::int64_t n, std::int64_t m, std::int64_t r);

// ---------------------------------------------------------------------------
// Per-graph reports

/// Every quantity a report needs, computed once per graph.
struct GraphFacts {
  Graph graph;
  std::string graph6;
  DegreeStats degrees;
  TriangleStats triangles;
  Spectrum spectrum;
  std::size_t clique = 0;
  MultipartiteCertificate multipartite;
  bool regular = false;

  std::int64_t n() const { return static_cast<std::int64_t>(graph.order()); }
  std::int64_t m() const { return degrees.m; }
  std::int64_t t() const { return triangles.t_total; }
  double lambda_n() const { return spectrum.laplacian_eigs.back(); }
  double mu_n() const { return spectrum.adjacency_eigs.back(); }
};

GraphFacts analyze(const Graph& g);

enum class Hypothesis { holds, fails, not_applicable };
enum class Verdict { pass, violated, flagged, not_applicable };

const char* to_string(Hypothesis h);
const char* to_string(Verdict v);

struct BoundEntry {
  std::string name;  // th1, th2_l1, th2_l2, th3, in1, cor4, cor4_min_eps, cor5
  std::optional<std::int64_t> r;
  std::optional<double> epsilon;
  Hypothesis hypothesis = Hypothesis::holds;
  std::string reason;  // why the entry is not applicable / the hypothesis fails
  std::optional<Rational> bound;       // exact bound when it is rational
  std::optional<double> bound_value;   // float bound (always set when evaluated)
  std::optional<double> observed;      // lambda_n, mu_n, or the th2_l1 residual
  std::optional<double> gap;           // >= 0 iff the inequality holds
  bool equality = false;
  std::optional<bool> predicted_equality;
  std::optional<bool> agreement;
  Verdict verdict = Verdict::not_applicable;

  /// Key like "th1[r=3]" or "cor4[eps=0.25]".
  std::string key() const;
};

struct BoundReport {
  std::string graph6;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t t = 0;
  double lambda_n = 0.0;
  double mu_n = 0.0;
  double spectrum_tol = 0.0;
  std::size_t clique_number = 0;
  bool regular = false;
  MultipartiteCertificate multipartite;
  std::vector<BoundEntry> entries;

  bool any_violation() const;
  bool any_disagreement() const;
  const BoundEntry* find(const std::string& key) const;
};

struct ReportOptions {
  std::optional<std::vector<std::int64_t>> r_list;        // default 2..min(6, n-1)
  std::vector<double> epsilon_list = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::optional<std::vector<std::int64_t>> cycle_r_list;  // default 3..n/2
  Tolerances tol;
};

std::vector<std::int64_t> default_r_list(std::int64_t n);
std::vector<std::int64_t> default_cycle_r_list(std::int64_t n);

BoundReport build_report(const GraphFacts& facts, const ReportOptions& options = {});
BoundReport build_report(const Graph& g, const ReportOptions& options = {});

}  // namespace specgraph
