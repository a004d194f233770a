#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specgraph/bounds.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/rational.hpp"

namespace specgraph {

struct IntegerPair {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  friend bool operator==(const IntegerPair&, const IntegerPair&) = default;
};

struct RationalPair {
  Rational lhs;
  Rational rhs;
};

/// lhs = 2 sum_u d(u)(t'(u) - t(u)), rhs = 4m^2 - 4 sum_{uv in E} d(u)d(v). Always equal.
IntegerPair check_proposition1(const Graph& g);
IntegerPair check_proposition1(const DegreeStats& deg, const TriangleStats& tri);

/// lhs = 2 sum_{uv in E} d(u)d(v), rhs = 4m^2 + sum d^3 - n sum d^2. Always lhs >= rhs.
IntegerPair check_proposition2(const Graph& g);
IntegerPair check_proposition2(const DegreeStats& deg);

// ---------------------------------------------------------------------------
// Degree-profile lemma: for 0 <= x_i <= 1 with sum x_i = n s,
//   sum 2 x_i^3 - (2 + s) x_i^2  >=  n s^3 - 2 n s^2.

struct LemmaInstance {
  std::size_t n = 0;
  double s = 0.0;
  std::vector<double> x;
};

inline constexpr double kLemmaFeasibilityTol = 1e-9;
inline constexpr double kLemmaRepairTol = 1e-12;
inline constexpr double kLemmaViolationTol = 1e-9;

/// Throws std::invalid_argument when x is infeasible beyond 1e-9.
double lemma1_value(const LemmaInstance& inst);
double lemma1_floor(std::size_t n, double s);

/// Feasibility repair: scale toward the target sum, clip to [0, 1], then
/// repeatedly spread the residual evenly over coordinates that can still move
/// in the needed direction, clipping again, until |sum - target| <= 1e-12.
std::vector<double> repair_to_sum(std::vector<double> x, double target);

/// Deterministic structured points: the uniform point, "staircase" points
/// (k ones, one fractional coordinate, the rest zero), equal-share points (k
/// coordinates at ns/k, the rest zero), and two-level points
/// with one coordinate on a grid and the others equal.
std::vector<std::vector<double>> lemma1_corner_probes(std::size_t n, double s);

struct LemmaSampleResult {
  std::size_t n = 0;
  double s = 0.0;
  double floor = 0.0;
  double min_value = 0.0;
  double margin = 0.0;  // min_value - floor
  std::vector<double> argmin;  // sorted ascending
  std::uint64_t samples = 0;
  std::uint64_t probes = 0;
  double uniform_error = 0.0;  // |value(s,...,s) - floor|
  bool violated = false;       // min_value < floor - 1e-9
};

/// Random draws alternate between the unit cube and shrinking perturbations of
/// the uniform point; every draw is repaired to be feasible.
LemmaSampleResult lemma1_sample_check(std::size_t n, double s, std::uint64_t samples, std::uint64_t seed);

/// lhs = -2 sum d^3 + (2m/n + 2n) sum d^2, rhs = 8m^2 - 8m^3/n^2. Always lhs <= rhs.
RationalPair check_lemma1_graph_instance(const DegreeStats& deg, std::int64_t n);

struct TuranStep {
  std::vector<IntegerPair> per_vertex;  // (2(r-1) t(u), (r-2) d(u)^2), first <= second
  IntegerPair aggregate;                // (6 t(G)(r-1), (r-2) sum d^2)
};

/// Throws std::domain_error when the clique number exceeds r.
TuranStep check_turan_step(const Graph& g, std::int64_t r);
TuranStep check_turan_step(const GraphFacts& facts, std::int64_t r);

struct VertexStepRecord {
  Vertex u = 0;
  bool degenerate = false;  // d(u) = 0: the partition is improper, trivially holds
  double in4_lhs = 0.0;     // lambda_n d(u)(n - d(u))
  double in4_rhs = 0.0;     // n e(N(u), V \ N(u))
  double in6_lhs = 0.0;     // mu_n
  double in6_rhs = 0.0;     // 2t(u)/d(u) + 2t'(u)/(n - d(u)) - 2m/n
  bool in4_holds = true;
  bool in6_holds = true;
};

VertexStepRecord check_vertex_partition_steps(const Graph& g, Vertex u, double tol = 1e-7);
VertexStepRecord check_vertex_partition_steps(const GraphFacts& facts, Vertex u, double tol = 1e-7);

// ---------------------------------------------------------------------------
// Exhaustive suite

struct SuiteConfig {
  std::size_t workers = 1;
  Tolerances tol;
  std::vector<std::int64_t> r_list = {2, 3, 4, 5, 6};
  std::vector<double> epsilon_list = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::optional<std::vector<std::int64_t>> cycle_r_list;  // default 3..n_max/2
  std::size_t partition_max_n = 6;
  std::size_t witness_cap = 16;
  std::size_t violation_cap = 1000;
  std::size_t chunks_per_order = 64;
  bool record_timing = false;
};

struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t violated = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t flagged = 0;
  std::optional<double> worst_margin;

  std::uint64_t total() const { return passed + violated + not_applicable + flagged; }
};

/// Numerical equality set versus structural prediction for one check.
/// "iff" counts both inclusions as mismatches; "implies" only structural => numeric.
struct Census {
  std::string relation = "iff";
  std::string predicate;
  std::uint64_t numeric = 0;
  std::uint64_t structural = 0;
  std::uint64_t both = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> witnesses;           // numeric equality graphs (capped)
  std::vector<std::string> mismatch_witnesses;  // capped
};

struct Violation {
  std::string check;
  std::string graph6;
  std::string detail;
};

struct SuiteReport {
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::vector<std::uint64_t> graphs_per_order;  // index i is order n_min + i
  std::uint64_t graphs = 0;
  std::map<std::string, CheckTally> checks;
  std::map<std::string, Census> censuses;
  std::vector<Violation> violations;  // capped
  std::uint64_t violation_total = 0;
  std::uint64_t census_mismatch_total = 0;
  std::optional<double> wall_time_s;

  bool clean() const { return violation_total == 0 && census_mismatch_total == 0; }
};

/// Every labeled graph of each order 1..n_max (n_max <= 7).
SuiteReport run_suite(std::size_t n_max, const SuiteConfig& config = {});
/// Same checks over an explicit corpus (any orders); graphs are processed in order.
SuiteReport run_corpus(std::span<const Graph> graphs, const SuiteConfig& config = {});

}  // namespace specgraph
