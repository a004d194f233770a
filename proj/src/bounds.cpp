#include "specgraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace specgraph {

namespace {

void require_simple_counts(std::int64_t n, std::int64_t m) {
  if (n < 1) throw std::invalid_argument("bound: n must be positive");
  if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("bound: m outside [0, n(n-1)/2]");
}

int128 i128(std::int64_t v) { return static_cast<int128>(v); }

// n^2 - 2m, positive for every simple graph.
int128 non_edge_weight(std::int64_t n, std::int64_t m) { return i128(n) * n - 2 * i128(m); }

std::string format_epsilon(double eps) {
  std::ostringstream os;
  os << eps;
  return os.str();
}

// Cycle searches explode on large sparse graphs; past this order the default
// cycle list stops at kCycleDefaultMaxLength.
constexpr std::int64_t kCycleExhaustiveOrder = 16;
constexpr std::int64_t kCycleDefaultMaxLength = 8;

void settle_lower(BoundEntry& e, double observed, const Rational& bound) {
  e.bound = bound;
  e.bound_value = bound.to_double();
  e.observed = observed;
  e.gap = observed - *e.bound_value;
}

void settle_upper(BoundEntry& e, double observed, const Rational& bound) {
  e.bound = bound;
  e.bound_value = bound.to_double();
  e.observed = observed;
  e.gap = *e.bound_value - observed;
}

void finish(BoundEntry& e, const Tolerances& tol, double scale = 1.0) {
  e.equality = std::abs(*e.gap) <= tol.eq_tol * scale;
  e.verdict = *e.gap < -tol.eq_tol * scale ? Verdict::violated : Verdict::pass;
  if (e.predicted_equality) e.agreement = (*e.predicted_equality == e.equality);
}

BoundEntry not_applicable(std::string name, std::string reason, Hypothesis h = Hypothesis::not_applicable) {
  BoundEntry e;
  e.name = std::move(name);
  e.hypothesis = h;
  e.reason = std::move(reason);
  e.verdict = Verdict::not_applicable;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------

Rational th1_bound(std::int64_t n, std::int64_t m, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("th1_bound: r must be at least 2");
  require_simple_counts(n, m);
  return Rational(2 * i128(m) * n, i128(r - 1) * non_edge_weight(n, m));
}

double th2_l1_residual(const DegreeStats& deg, const TriangleStats& tri, double lambda_n) {
  const auto n = static_cast<double>(deg.degrees.size());
  const auto m = static_cast<double>(deg.m);
  return 6.0 * n * static_cast<double>(tri.t_total) - (n + lambda_n) * static_cast<double>(deg.sum_d2) +
         2.0 * n * m * lambda_n;
}

double th2_l1_scale(const DegreeStats& deg, const TriangleStats& tri, double lambda_n) {
  const auto n = static_cast<double>(deg.degrees.size());
  return std::max({1.0, 6.0 * n * static_cast<double>(tri.t_total), (n + lambda_n) * static_cast<double>(deg.sum_d2)});
}

Rational th2_l2_bound(std::int64_t n, std::int64_t m, std::int64_t t) {
  require_simple_counts(n, m);
  if (m == 0) throw std::domain_error("th2_l2_bound: undefined for m = 0");
  const int128 num = (2 * i128(m) * m - 3 * i128(n) * t) * n;
  return Rational(num, i128(m) * non_edge_weight(n, m));
}

Rational th3_bound(std::int64_t n, std::int64_t m, std::int64_t t) {
  require_simple_counts(n, m);
  if (m == 0) throw std::domain_error("th3_bound: undefined for m = 0");
  const int128 num = 3 * i128(n) * n * n * t - 4 * i128(m) * m * m;
  return Rational(num, i128(n) * m * non_edge_weight(n, m));
}

double in1_bound(std::int64_t n, std::int64_t m, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("in1_bound: r must be at least 2");
  require_simple_counts(n, m);
  const double density = 2.0 * static_cast<double>(m) / (static_cast<double>(n) * static_cast<double>(n));
  return -(2.0 / static_cast<double>(r)) * std::pow(density, static_cast<double>(r)) * static_cast<double>(n);
}

CheckOutcome cor4_check(std::int64_t n, std::int64_t m, std::int64_t t, double epsilon, double mu_n, double tol) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("cor4_check: epsilon outside [0, 1]");
  require_simple_counts(n, m);
  if (m == 0) throw std::domain_error("cor4_check: requires m >= 1");
  CheckOutcome out;
  const long double lhs = static_cast<long double>(t) * n * n * n;
  const long double rhs = static_cast<long double>(epsilon) * m * m * m;
  if (lhs > rhs) return out;
  const double bound = -(1.0 - epsilon) * 4.0 * static_cast<double>(m) * static_cast<double>(m) /
                       (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n));
  out.bound = bound;
  out.gap = bound - mu_n;
  out.status = *out.gap < -tol ? CheckStatus::violated : CheckStatus::holds;
  return out;
}

Rational cor4_min_epsilon(std::int64_t n, std::int64_t m, std::int64_t t) {
  require_simple_counts(n, m);
  if (m == 0) throw std::domain_error("cor4_min_epsilon: requires m >= 1");
  return Rational(i128(t) * n * n * n, i128(m) * m * m);
}

Rational cor4_bound_at_min_epsilon(std::int64_t n, std::int64_t m, std::int64_t t) {
  // -(1 - t n^3/m^3) 4m^2/n^3 = -4m^2/n^3 + 4t/m
  require_simple_counts(n, m);
  if (m == 0) throw std::domain_error("cor4_bound_at_min_epsilon: requires m >= 1");
  return Rational(-4 * i128(m) * m, i128(n) * n * n) + Rational(4 * i128(t), i128(m));
}

Rational cor5_bound(std::int64_t n, std::int64_t m, std::int64_t r) {
  require_simple_counts(n, m);
  return Rational(-4 * i128(m) * m, i128(n) * n * n) + Rational(2 * (r - 3));
}

CheckOutcome cor5_check(std::int64_t n, std::int64_t m, std::int64_t r, double mu_n, bool has_cycle_r, double tol) {
  if (r < 3 || 2 * r > n) throw std::invalid_argument("cor5_check: r outside [3, n/2]");
  require_simple_counts(n, m);
  if (m == 0) throw std::domain_error("cor5_check: requires m >= 1");
  CheckOutcome out;
  if (has_cycle_r) return out;
  out.bound = cor5_bound(n, m, r).to_double();
  out.gap = *out.bound - mu_n;
  out.status = *out.gap < -tol ? CheckStatus::violated : CheckStatus::holds;
  return out;
}

// ---------------------------------------------------------------------------

GraphFacts analyze(const Graph& g) {
  GraphFacts f{g, to_graph6(g), degree_stats(g), triangle_stats(g), eigenvalues(g), clique_number(g),
               complete_multipartite_certificate(g), is_regular(g)};
  return f;
}

const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::holds: return "holds";
    case Hypothesis::fails: return "fails";
    case Hypothesis::not_applicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::violated: return "violated";
    case Verdict::flagged: return "flagged";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string BoundEntry::key() const {
  if (r) return name + "[r=" + std::to_string(*r) + "]";
  if (epsilon && name == "cor4") return name + "[eps=" + format_epsilon(*epsilon) + "]";
  return name;
}

bool BoundReport::any_violation() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::violated; });
}

bool BoundReport::any_disagreement() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.agreement && !*e.agreement; });
}

const BoundEntry* BoundReport::find(const std::string& key) const {
  for (const auto& e : entries)
    if (e.key() == key) return &e;
  return nullptr;
}

std::vector<std::int64_t> default_r_list(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 2; r <= std::min<std::int64_t>(6, n - 1); ++r) out.push_back(r);
  return out;
}

std::vector<std::int64_t> default_cycle_r_list(std::int64_t n) {
  std::int64_t hi = n / 2;
  if (n > kCycleExhaustiveOrder) hi = std::min(hi, kCycleDefaultMaxLength);
  std::vector<std::int64_t> out;
  for (std::int64_t r = 3; r <= hi; ++r) out.push_back(r);
  return out;
}

BoundReport build_report(const GraphFacts& f, const ReportOptions& options) {
  const Tolerances& tol = options.tol;
  const std::int64_t n = f.n();
  const std::int64_t m = f.m();
  const std::int64_t t = f.t();
  const double lambda = f.lambda_n();
  const double mu = f.mu_n();
  const bool multipartite = f.multipartite.is_multipartite;
  const bool regular_multipartite = multipartite && f.regular;

  BoundReport rep;
  rep.graph6 = f.graph6;
  rep.n = n;
  rep.m = m;
  rep.t = t;
  rep.lambda_n = lambda;
  rep.mu_n = mu;
  rep.spectrum_tol = f.spectrum.tol;
  rep.clique_number = f.clique;
  rep.regular = f.regular;
  rep.multipartite = f.multipartite;

  {
    BoundEntry e;
    e.name = "th2_l1";
    e.bound = Rational(0);
    e.bound_value = 0.0;
    e.observed = th2_l1_residual(f.degrees, f.triangles, lambda);
    e.gap = e.observed;
    e.predicted_equality = multipartite;
    finish(e, tol, th2_l1_scale(f.degrees, f.triangles, lambda));
    rep.entries.push_back(std::move(e));
  }

  if (m == 0) {
    rep.entries.push_back(not_applicable("th2_l2", "m = 0"));
    rep.entries.push_back(not_applicable("th3", "m = 0"));
  } else {
    BoundEntry l2;
    l2.name = "th2_l2";
    settle_lower(l2, lambda, th2_l2_bound(n, m, t));
    l2.predicted_equality = regular_multipartite;
    finish(l2, tol);
    rep.entries.push_back(std::move(l2));

    BoundEntry th3;
    th3.name = "th3";
    settle_upper(th3, mu, th3_bound(n, m, t));
    th3.predicted_equality = regular_multipartite;
    finish(th3, tol);
    rep.entries.push_back(std::move(th3));
  }

  const auto r_list = options.r_list ? *options.r_list : default_r_list(n);
  for (std::int64_t r : r_list) {
    const auto clique = static_cast<std::int64_t>(f.clique);
    BoundEntry e;
    if (r < 2) {
      e = not_applicable("th1", "r < 2");
    } else if (m == 0) {
      e = not_applicable("th1", "m = 0");
    } else if (clique > r) {
      e = not_applicable("th1", "clique number " + std::to_string(clique) + " > r", Hypothesis::fails);
    } else {
      e.name = "th1";
      settle_lower(e, lambda, th1_bound(n, m, r));
      e.predicted_equality = is_regular_complete_r_partite(f.graph, static_cast<std::size_t>(r));
      finish(e, tol);
    }
    e.r = r;
    rep.entries.push_back(std::move(e));
  }

  for (std::int64_t r : r_list) {
    const auto clique = static_cast<std::int64_t>(f.clique);
    BoundEntry e;
    if (r < 2) {
      e = not_applicable("in1", "r < 2");
    } else if (clique > r) {
      e = not_applicable("in1", "clique number " + std::to_string(clique) + " > r", Hypothesis::fails);
    } else {
      e.name = "in1";
      e.bound_value = in1_bound(n, m, r);
      e.observed = mu;
      e.gap = *e.bound_value - mu;
      e.equality = std::abs(*e.gap) <= tol.eq_tol;
      if (*e.gap > tol.strict_margin) {
        e.verdict = Verdict::pass;
      } else if (m == 0) {
        e.verdict = Verdict::flagged;
        e.reason = "m = 0: bound and mu_n are both 0, strictness cannot hold";
      } else {
        e.verdict = Verdict::violated;
      }
    }
    e.r = r;
    rep.entries.push_back(std::move(e));
  }

  for (double eps : options.epsilon_list) {
    BoundEntry e;
    if (!(eps >= 0.0 && eps <= 1.0)) {
      e = not_applicable("cor4", "epsilon outside [0, 1]");
    } else if (m == 0) {
      e = not_applicable("cor4", "m = 0");
    } else {
      const auto out = cor4_check(n, m, t, eps, mu, tol.eq_tol);
      if (out.status == CheckStatus::not_applicable) {
        e = not_applicable("cor4", "t n^3 > eps m^3", Hypothesis::fails);
      } else {
        e.name = "cor4";
        e.bound_value = out.bound;
        e.observed = mu;
        e.gap = out.gap;
        finish(e, tol);
      }
    }
    e.epsilon = eps;
    rep.entries.push_back(std::move(e));
  }

  if (m >= 1) {
    const Rational eps_star = cor4_min_epsilon(n, m, t);
    if (eps_star > Rational(1)) {
      rep.entries.push_back(not_applicable("cor4_min_eps", "t n^3 / m^3 > 1", Hypothesis::fails));
    } else {
      BoundEntry e;
      e.name = "cor4_min_eps";
      settle_upper(e, mu, cor4_bound_at_min_epsilon(n, m, t));
      e.epsilon = eps_star.to_double();
      finish(e, tol);
      rep.entries.push_back(std::move(e));
    }
  } else {
    rep.entries.push_back(not_applicable("cor4_min_eps", "m = 0"));
  }

  const auto cycle_list = options.cycle_r_list ? *options.cycle_r_list : default_cycle_r_list(n);
  for (std::int64_t r : cycle_list) {
    BoundEntry e;
    if (r < 3 || 2 * r > n) {
      e = not_applicable("cor5", "r outside [3, n/2]");
    } else if (m == 0) {
      e = not_applicable("cor5", "m = 0");
    } else if (contains_cycle_of_length(f.graph, static_cast<std::size_t>(r))) {
      e = not_applicable("cor5", "graph contains a cycle of length r", Hypothesis::fails);
    } else {
      e.name = "cor5";
      settle_upper(e, mu, cor5_bound(n, m, r));
      finish(e, tol);
    }
    e.r = r;
    rep.entries.push_back(std::move(e));
  }

  return rep;
}

BoundReport build_report(const Graph& g, const ReportOptions& options) { return build_report(analyze(g), options); }

}  // namespace specgraph
