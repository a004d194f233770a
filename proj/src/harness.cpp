#include "specgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "specgraph/checked.hpp"
#include "specgraph/families.hpp"
#include "specgraph/random.hpp"
#include "specgraph/spectra.hpp"
#include "specgraph/structure.hpp"

namespace specgraph {

// ---------------------------------------------------------------------------
// Propositions

IntegerPair check_proposition1(const DegreeStats& deg, const TriangleStats& tri) {
  IntegerPair p;
  for (std::size_t u = 0; u < deg.degrees.size(); ++u) {
    const std::int64_t diff = checked_sub(tri.t_prime_at[u], tri.t_at[u]);
    p.lhs = checked_add(p.lhs, checked_mul(deg.degrees[u], diff));
  }
  p.lhs = checked_mul(2, p.lhs);
  p.rhs = checked_sub(checked_mul(4, checked_mul(deg.m, deg.m)), checked_mul(4, deg.edge_deg_prod));
  return p;
}

IntegerPair check_proposition1(const Graph& g) { return check_proposition1(degree_stats(g), triangle_stats(g)); }

IntegerPair check_proposition2(const DegreeStats& deg) {
  const auto n = static_cast<std::int64_t>(deg.degrees.size());
  IntegerPair p;
  p.lhs = checked_mul(2, deg.edge_deg_prod);
  p.rhs = checked_sub(checked_add(checked_mul(4, checked_mul(deg.m, deg.m)), deg.sum_d3), checked_mul(n, deg.sum_d2));
  return p;
}

IntegerPair check_proposition2(const Graph& g) { return check_proposition2(degree_stats(g)); }

// ---------------------------------------------------------------------------
// Degree-profile lemma

double lemma1_floor(std::size_t n, double s) {
  const auto nd = static_cast<double>(n);
  return nd * s * s * s - 2.0 * nd * s * s;
}

double lemma1_value(const LemmaInstance& inst) {
  if (inst.x.size() != inst.n || inst.n == 0) throw std::invalid_argument("lemma1_value: x must have n >= 1 entries");
  if (!(inst.s >= 0.0 && inst.s <= 1.0)) throw std::invalid_argument("lemma1_value: s outside [0, 1]");
  double sum = 0.0;
  double value = 0.0;
  for (double xi : inst.x) {
    if (xi < -kLemmaFeasibilityTol || xi > 1.0 + kLemmaFeasibilityTol)
      throw std::invalid_argument("lemma1_value: coordinate outside [0, 1]");
    sum += xi;
    value += 2.0 * xi * xi * xi - (2.0 + inst.s) * xi * xi;
  }
  if (std::abs(sum - static_cast<double>(inst.n) * inst.s) > kLemmaFeasibilityTol)
    throw std::invalid_argument("lemma1_value: coordinates do not sum to n s");
  return value;
}

std::vector<double> repair_to_sum(std::vector<double> x, double target) {
  const std::size_t n = x.size();
  if (n == 0 || target < 0.0 || target > static_cast<double>(n))
    throw std::invalid_argument("repair_to_sum: target outside [0, n]");
  auto clip = [](double v) { return std::clamp(v, 0.0, 1.0); };
  for (double& v : x) v = clip(v);

  const double initial = std::accumulate(x.begin(), x.end(), 0.0);
  if (initial > 0.0) {
    const double scale = target / initial;
    for (double& v : x) v = clip(v * scale);
  }

  // Each pass either lands on the target or pins another coordinate at a bound.
  for (std::size_t iter = 0; iter < 4 * n + 64; ++iter) {
    const double residual = target - std::accumulate(x.begin(), x.end(), 0.0);
    if (std::abs(residual) <= kLemmaRepairTol) return x;
    std::size_t movable = 0;
    for (double v : x) movable += (residual > 0 ? v < 1.0 : v > 0.0) ? 1 : 0;
    if (movable == 0) break;
    const double step = residual / static_cast<double>(movable);
    for (double& v : x)
      if (residual > 0 ? v < 1.0 : v > 0.0) v = clip(v + step);
  }
  const double residual = target - std::accumulate(x.begin(), x.end(), 0.0);
  if (std::abs(residual) > kLemmaRepairTol) throw std::runtime_error("repair_to_sum: did not converge");
  return x;
}

std::vector<std::vector<double>> lemma1_corner_probes(std::size_t n, double s) {
  if (n == 0 || !(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("lemma1_corner_probes: need n >= 1, s in [0,1]");
  const double total = static_cast<double>(n) * s;
  std::vector<std::vector<double>> probes;
  probes.emplace_back(n, s);

  // Staircase: as many ones as fit, the remainder on one coordinate.
  {
    std::vector<double> x(n, 0.0);
    double left = total;
    for (std::size_t i = n; i-- > 0 && left > 0.0;) {
      x[i] = std::min(1.0, left);
      left -= x[i];
    }
    probes.push_back(repair_to_sum(std::move(x), total));
  }

  // Equal shares: k coordinates at ns/k, the rest zero.
  for (std::size_t k = 1; k < n; ++k) {
    const double share = total / static_cast<double>(k);
    if (share > 1.0) continue;
    std::vector<double> x(n, 0.0);
    std::fill(x.end() - static_cast<std::ptrdiff_t>(k), x.end(), share);
    probes.push_back(repair_to_sum(std::move(x), total));
  }

  // Two-level: one coordinate a, the remaining n-1 equal to (ns - a)/(n-1).
  if (n >= 2) {
    constexpr int kGrid = 200;
    for (int k = 0; k <= kGrid; ++k) {
      const double a = static_cast<double>(k) / kGrid;
      const double z = (total - a) / static_cast<double>(n - 1);
      if (z < 0.0 || z > 1.0) continue;
      std::vector<double> x(n, z);
      x[0] = a;
      probes.push_back(repair_to_sum(std::move(x), total));
    }
  }
  return probes;
}

LemmaSampleResult lemma1_sample_check(std::size_t n, double s, std::uint64_t samples, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("lemma1_sample_check: n must be positive");
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("lemma1_sample_check: s outside [0, 1]");
  const double total = static_cast<double>(n) * s;

  LemmaSampleResult res;
  res.n = n;
  res.s = s;
  res.floor = lemma1_floor(n, s);
  res.min_value = std::numeric_limits<double>::infinity();
  res.uniform_error = std::abs(lemma1_value({n, s, std::vector<double>(n, s)}) - res.floor);

  auto consider = [&](std::vector<double> x) {
    const double v = lemma1_value({n, s, x});
    if (v < res.min_value) {
      res.min_value = v;
      res.argmin = std::move(x);
    }
  };

  for (auto& probe : lemma1_corner_probes(n, s)) {
    consider(std::move(probe));
    ++res.probes;
  }

  SplitMix64 rng(seed);
  std::vector<double> x(n);
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (i % 2 == 0) {
      for (double& v : x) v = rng.uniform();
    } else {
      // Perturbation radius log-uniform in [1e-6, 1].
      const double radius = std::pow(10.0, -6.0 * rng.uniform());
      for (double& v : x) v = s + radius * (rng.uniform() - 0.5);
    }
    consider(repair_to_sum(x, total));
    ++res.samples;
  }

  std::sort(res.argmin.begin(), res.argmin.end());
  res.margin = res.min_value - res.floor;
  res.violated = res.min_value < res.floor - kLemmaViolationTol;
  return res;
}

RationalPair check_lemma1_graph_instance(const DegreeStats& deg, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("check_lemma1_graph_instance: n must be positive");
  const int128 m = deg.m;
  RationalPair p;
  p.lhs = Rational(-2 * static_cast<int128>(deg.sum_d3), 1) +
          Rational(2 * m + 2 * static_cast<int128>(n) * n, n) * Rational(deg.sum_d2);
  p.rhs = Rational(8 * m * m, 1) - Rational(8 * m * m * m, static_cast<int128>(n) * n);
  return p;
}

// ---------------------------------------------------------------------------
// Proof-step checks

TuranStep check_turan_step(const GraphFacts& f, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("check_turan_step: r must be at least 2");
  if (static_cast<std::int64_t>(f.clique) > r)
    throw std::domain_error("check_turan_step: clique number " + std::to_string(f.clique) + " exceeds r");
  TuranStep step;
  for (std::size_t u = 0; u < f.degrees.degrees.size(); ++u) {
    const std::int64_t d = f.degrees.degrees[u];
    step.per_vertex.push_back({checked_mul(2 * (r - 1), f.triangles.t_at[u]), checked_mul(r - 2, checked_mul(d, d))});
  }
  step.aggregate = {checked_mul(6 * (r - 1), f.triangles.t_total), checked_mul(r - 2, f.degrees.sum_d2)};
  return step;
}

TuranStep check_turan_step(const Graph& g, std::int64_t r) {
  const GraphFacts f{g, {}, degree_stats(g), triangle_stats(g), {}, clique_number(g), {}, false};
  return check_turan_step(f, r);
}

VertexStepRecord check_vertex_partition_steps(const GraphFacts& f, Vertex u, double tol) {
  const Graph& g = f.graph;
  if (u >= g.order()) throw std::invalid_argument("check_vertex_partition_steps: vertex out of range");
  const auto n = static_cast<double>(g.order());
  const auto d = static_cast<double>(f.degrees.degrees[u]);
  VertexStepRecord rec;
  rec.u = u;
  if (f.degrees.degrees[u] == 0) {
    rec.degenerate = true;
    return rec;
  }
  const VertexSet nbr = g.neighbors(u);
  const auto cut = static_cast<double>(edges_between(g, nbr, ~nbr));

  rec.in4_lhs = f.lambda_n() * d * (n - d);
  rec.in4_rhs = n * cut;
  rec.in4_holds = rec.in4_lhs >= rec.in4_rhs - tol * std::max(1.0, rec.in4_rhs);

  rec.in6_lhs = f.mu_n();
  rec.in6_rhs = 2.0 * static_cast<double>(f.triangles.t_at[u]) / d +
                2.0 * static_cast<double>(f.triangles.t_prime_at[u]) / (n - d) - 2.0 * static_cast<double>(f.m()) / n;
  rec.in6_holds = rec.in6_lhs <= rec.in6_rhs + tol;
  return rec;
}

VertexStepRecord check_vertex_partition_steps(const Graph& g, Vertex u, double tol) {
  return check_vertex_partition_steps(analyze(g), u, tol);
}

// ---------------------------------------------------------------------------
// Suite

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class Accumulator {
 public:
  explicit Accumulator(const SuiteConfig& config) : config_(&config) {}

  void tally(const std::string& key, Verdict verdict, std::optional<double> margin, const std::string& g6,
             const std::string& detail = {}) {
    CheckTally& t = checks[key];
    switch (verdict) {
      case Verdict::pass: ++t.passed; break;
      case Verdict::violated: ++t.violated; break;
      case Verdict::flagged: ++t.flagged; break;
      case Verdict::not_applicable: ++t.not_applicable; break;
    }
    if (margin && (verdict == Verdict::pass || verdict == Verdict::violated) && std::isfinite(*margin))
      t.worst_margin = t.worst_margin ? std::min(*t.worst_margin, *margin) : *margin;
    if (verdict == Verdict::violated) {
      ++violation_total;
      if (violations.size() < config_->violation_cap)
        violations.push_back({key, g6, detail.empty() && margin ? "margin=" + fmt_double(*margin) : detail});
    }
  }

  void census(const std::string& key, const char* relation, const char* predicate, bool numeric, bool structural,
              const std::string& g6) {
    Census& c = censuses[key];
    c.relation = relation;
    c.predicate = predicate;
    c.numeric += numeric ? 1 : 0;
    c.structural += structural ? 1 : 0;
    c.both += (numeric && structural) ? 1 : 0;
    if (numeric && c.witnesses.size() < config_->witness_cap) c.witnesses.push_back(g6);
    const bool iff = c.relation == "iff";
    const bool mismatch = iff ? numeric != structural : (structural && !numeric);
    if (mismatch) {
      ++c.mismatches;
      ++census_mismatch_total;
      if (c.mismatch_witnesses.size() < config_->witness_cap) c.mismatch_witnesses.push_back(g6);
    }
  }

  void merge(Accumulator&& other) {
    for (auto& [key, t] : other.checks) {
      CheckTally& mine = checks[key];
      mine.passed += t.passed;
      mine.violated += t.violated;
      mine.not_applicable += t.not_applicable;
      mine.flagged += t.flagged;
      if (t.worst_margin)
        mine.worst_margin = mine.worst_margin ? std::min(*mine.worst_margin, *t.worst_margin) : *t.worst_margin;
    }
    for (auto& [key, c] : other.censuses) {
      Census& mine = censuses[key];
      mine.relation = c.relation;
      mine.predicate = c.predicate;
      mine.numeric += c.numeric;
      mine.structural += c.structural;
      mine.both += c.both;
      mine.mismatches += c.mismatches;
      for (auto& w : c.witnesses)
        if (mine.witnesses.size() < config_->witness_cap) mine.witnesses.push_back(std::move(w));
      for (auto& w : c.mismatch_witnesses)
        if (mine.mismatch_witnesses.size() < config_->witness_cap) mine.mismatch_witnesses.push_back(std::move(w));
    }
    for (auto& v : other.violations)
      if (violations.size() < config_->violation_cap) violations.push_back(std::move(v));
    violation_total += other.violation_total;
    census_mismatch_total += other.census_mismatch_total;
  }

  std::map<std::string, CheckTally> checks;
  std::map<std::string, Census> censuses;
  std::vector<Violation> violations;
  std::uint64_t violation_total = 0;
  std::uint64_t census_mismatch_total = 0;

 private:
  const SuiteConfig* config_;
};

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::violated; }

void evaluate_graph(const Graph& g, const SuiteConfig& config, const ReportOptions& options, Accumulator& acc) {
  const GraphFacts f = analyze(g);
  const std::string& g6 = f.graph6;
  const double eq_tol = config.tol.eq_tol;
  const std::size_t n = g.order();
  const double nd = static_cast<double>(n);

  // Bound reports and their equality censuses.
  const BoundReport rep = build_report(f, options);
  for (const auto& e : rep.entries) {
    acc.tally(e.key(), e.verdict, e.gap, g6);
    if (!e.predicted_equality) continue;
    const char* predicate = e.name == "th2_l1" ? "complete multipartite"
                            : e.name == "th1"  ? "regular complete r-partite"
                                               : "regular complete multipartite";
    acc.census(e.key(), "iff", predicate, e.equality, *e.predicted_equality, g6);
  }

  // Exact identities.
  const auto p1 = check_proposition1(f.degrees, f.triangles);
  acc.tally("prop1", verdict_of(p1.lhs == p1.rhs), -std::abs(static_cast<double>(p1.rhs - p1.lhs)), g6,
            "lhs=" + std::to_string(p1.lhs) + " rhs=" + std::to_string(p1.rhs));
  const auto p2 = check_proposition2(f.degrees);
  acc.tally("prop2", verdict_of(p2.lhs >= p2.rhs), static_cast<double>(p2.lhs - p2.rhs), g6,
            "lhs=" + std::to_string(p2.lhs) + " rhs=" + std::to_string(p2.rhs));
  acc.census("prop2", "implies", "regular", p2.lhs == p2.rhs, f.regular, g6);

  const auto li = check_lemma1_graph_instance(f.degrees, f.n());
  acc.tally("lemma1_instance", verdict_of(li.lhs <= li.rhs), (li.rhs - li.lhs).to_double(), g6,
            "lhs=" + li.lhs.to_string() + " rhs=" + li.rhs.to_string());
  acc.census("lemma1_instance", "iff", "regular", li.lhs == li.rhs, f.regular, g6);

  for (std::int64_t r : config.r_list) {
    const std::string key = "turan_step[r=" + std::to_string(r) + "]";
    if (r < 2 || static_cast<std::int64_t>(f.clique) > r) {
      acc.tally(key, Verdict::not_applicable, std::nullopt, g6);
      continue;
    }
    const auto step = check_turan_step(f, r);
    std::int64_t worst = step.aggregate.rhs - step.aggregate.lhs;
    for (const auto& pv : step.per_vertex) worst = std::min(worst, pv.rhs - pv.lhs);
    acc.tally(key, verdict_of(worst >= 0), static_cast<double>(worst), g6);
  }

  // Per-vertex partition steps and the summation back to the th2_l1 residual.
  {
    double worst4 = std::numeric_limits<double>::infinity();
    double worst6 = std::numeric_limits<double>::infinity();
    bool ok4 = true;
    bool ok6 = true;
    double slack_sum = 0.0;
    for (Vertex u = 0; u < n; ++u) {
      const auto rec = check_vertex_partition_steps(f, u, eq_tol);
      if (rec.degenerate) continue;
      ok4 = ok4 && rec.in4_holds;
      ok6 = ok6 && rec.in6_holds;
      worst4 = std::min(worst4, rec.in4_lhs - rec.in4_rhs);
      worst6 = std::min(worst6, rec.in6_rhs - rec.in6_lhs);
      slack_sum += rec.in4_lhs - rec.in4_rhs;
    }
    const bool any = std::isfinite(worst4);
    acc.tally("vertex_in4", any ? verdict_of(ok4) : Verdict::pass, any ? std::optional(worst4) : std::nullopt, g6);
    acc.tally("vertex_in6", any ? verdict_of(ok6) : Verdict::pass, any ? std::optional(worst6) : std::nullopt, g6);

    const double residual = th2_l1_residual(f.degrees, f.triangles, f.lambda_n());
    const double scale = th2_l1_scale(f.degrees, f.triangles, f.lambda_n());
    const double diff = std::abs(slack_sum - residual);
    acc.tally("vertex_sum_l1", verdict_of(diff <= eq_tol * scale), -diff, g6,
              "sum=" + fmt_double(slack_sum) + " residual=" + fmt_double(residual));
  }

  // Exhaustive two-part partitions.
  if (n >= 2 && n <= config.partition_max_n) {
    double worst_l = std::numeric_limits<double>::infinity();
    double worst_a = std::numeric_limits<double>::infinity();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      VertexSet v1(n);
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1U) v1.insert(v);
      worst_l = std::min(worst_l, f.lambda_n() - partition_laplacian_bound(g, v1));
      worst_a = std::min(worst_a, partition_adjacency_bound(g, v1) - f.mu_n());
    }
    acc.tally("partition_mainin", verdict_of(worst_l >= -eq_tol), worst_l, g6);
    acc.tally("partition_mainin1", verdict_of(worst_a >= -eq_tol), worst_a, g6);
  } else {
    acc.tally("partition_mainin", Verdict::not_applicable, std::nullopt, g6);
    acc.tally("partition_mainin1", Verdict::not_applicable, std::nullopt, g6);
  }

  // Spectrum sanity.
  {
    const auto& lap = f.spectrum.laplacian_eigs;
    const auto& adj = f.spectrum.adjacency_eigs;
    const double lap_sum = std::accumulate(lap.begin(), lap.end(), 0.0);
    const double adj_sum = std::accumulate(adj.begin(), adj.end(), 0.0);
    const double trace_err = std::max(std::abs(lap_sum - 2.0 * static_cast<double>(f.m())), std::abs(adj_sum));
    const double trace_tol = nd * 1e-9;
    acc.tally("spectrum_trace", verdict_of(trace_err <= trace_tol), trace_tol - trace_err, g6);

    const double tol = f.spectrum.tol + 1e-12;
    const auto max_deg = static_cast<double>(g.max_degree());
    bool ok = std::abs(lap.front()) <= tol && f.mu_n() <= tol;
    double margin = tol - std::abs(lap.front());
    if (f.m() >= 1) {
      ok = ok && f.lambda_n() >= max_deg + 1.0 - tol && f.lambda_n() <= 2.0 * max_deg + tol &&
           f.mu_n() >= -max_deg - tol;
      margin = std::min({margin, f.lambda_n() - (max_deg + 1.0), 2.0 * max_deg - f.lambda_n(), f.mu_n() + max_deg});
    } else {
      ok = ok && std::abs(f.lambda_n()) <= tol;
    }
    acc.tally("spectrum_bracket", verdict_of(ok), margin, g6);

    double cubes = 0.0;
    for (double mu : adj) cubes += mu * mu * mu;
    const double tri_err = std::abs(cubes / 6.0 - static_cast<double>(f.t()));
    acc.tally("triangle_trace", verdict_of(tri_err <= 1e-6), 1e-6 - tri_err, g6);
  }
}

struct WorkItem {
  EnumerationRange range;
  std::span<const Graph> corpus;
  bool from_corpus = false;
};

SuiteReport execute(std::vector<WorkItem> items, const SuiteConfig& config, const ReportOptions& options,
                    std::size_t n_min, std::size_t n_max, std::vector<std::uint64_t> per_order) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<Accumulator> results(items.size(), Accumulator(config));
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
      const WorkItem& item = items[i];
      if (item.from_corpus) {
        for (const Graph& g : item.corpus) evaluate_graph(g, config, options, results[i]);
      } else {
        enumerate_range(item.range, [&](const Graph& g) { evaluate_graph(g, config, options, results[i]); });
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, items.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Accumulator total(config);
  for (auto& r : results) total.merge(std::move(r));

  SuiteReport rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  rep.graphs_per_order = std::move(per_order);
  rep.graphs = std::accumulate(rep.graphs_per_order.begin(), rep.graphs_per_order.end(), std::uint64_t{0});
  rep.checks = std::move(total.checks);
  rep.censuses = std::move(total.censuses);
  rep.violations = std::move(total.violations);
  rep.violation_total = total.violation_total;
  rep.census_mismatch_total = total.census_mismatch_total;
  if (config.record_timing)
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

ReportOptions suite_options(const SuiteConfig& config, std::size_t n_max) {
  ReportOptions opts;
  opts.r_list = config.r_list;
  opts.epsilon_list = config.epsilon_list;
  if (config.cycle_r_list) {
    opts.cycle_r_list = config.cycle_r_list;
  } else {
    std::vector<std::int64_t> cycles;
    for (std::int64_t r = 3; 2 * r <= static_cast<std::int64_t>(n_max); ++r) cycles.push_back(r);
    opts.cycle_r_list = cycles;
  }
  opts.tol = config.tol;
  return opts;
}

}  // namespace

SuiteReport run_suite(std::size_t n_max, const SuiteConfig& config) {
  if (n_max < 1 || n_max > kMaxEnumerationOrder)
    throw std::invalid_argument("run_suite: n_max must be in [1, " + std::to_string(kMaxEnumerationOrder) + "]");
  if (config.chunks_per_order == 0) throw std::invalid_argument("run_suite: chunks_per_order must be positive");
  std::vector<WorkItem> items;
  std::vector<std::uint64_t> per_order;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::uint64_t count = labeled_graph_count(n);
    per_order.push_back(count);
    const auto k = static_cast<std::size_t>(std::min<std::uint64_t>(config.chunks_per_order, count));
    for (const auto& range : split_range(n, k)) items.push_back({range, {}, false});
  }
  return execute(std::move(items), config, suite_options(config, n_max), 1, n_max, std::move(per_order));
}

SuiteReport run_corpus(std::span<const Graph> graphs, const SuiteConfig& config) {
  std::size_t n_min = std::numeric_limits<std::size_t>::max();
  std::size_t n_max = 0;
  for (const auto& g : graphs) {
    n_min = std::min(n_min, g.order());
    n_max = std::max(n_max, g.order());
  }
  if (graphs.empty()) n_min = n_max = 0;
  std::vector<std::uint64_t> per_order(graphs.empty() ? 0 : n_max - n_min + 1, 0);
  for (const auto& g : graphs) ++per_order[g.order() - n_min];

  // Fixed-size batches keep the merge order independent of the worker count.
  constexpr std::size_t kBatch = 16;
  std::vector<WorkItem> items;
  for (std::size_t i = 0; i < graphs.size(); i += kBatch)
    items.push_back({{}, graphs.subspan(i, std::min(kBatch, graphs.size() - i)), true});

  ReportOptions opts = suite_options(config, n_max);
  if (!config.cycle_r_list) opts.cycle_r_list = default_cycle_r_list(static_cast<std::int64_t>(n_max));
  return execute(std::move(items), config, opts, n_min, n_max, std::move(per_order));
}

}  // namespace specgraph
