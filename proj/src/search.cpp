#include "specgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "specgraph/bounds.hpp"
#include "specgraph/random.hpp"
#include "specgraph/spectra.hpp"
#include "specgraph/structure.hpp"

namespace specgraph {

SearchObjective SearchObjective::parse(std::string_view text) {
  SearchObjective obj;
  if (text == "min-gap-th2") {
    obj.kind = SearchObjectiveKind::th2;
  } else if (text == "min-gap-th3") {
    obj.kind = SearchObjectiveKind::th3;
  } else if (text.starts_with("min-gap-th1:")) {
    obj.kind = SearchObjectiveKind::th1;
    const auto digits = text.substr(12);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), obj.r);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || obj.r < 2)
      throw std::invalid_argument("objective: min-gap-th1 needs an integer r >= 2");
  } else {
    throw std::invalid_argument("unknown objective '" + std::string(text) +
                                "' (expected min-gap-th1:<r>, min-gap-th2, min-gap-th3)");
  }
  return obj;
}

std::string SearchObjective::to_string() const {
  switch (kind) {
    case SearchObjectiveKind::th1: return "min-gap-th1:" + std::to_string(r);
    case SearchObjectiveKind::th2: return "min-gap-th2";
    case SearchObjectiveKind::th3: return "min-gap-th3";
  }
  return "?";
}

std::optional<double> objective_gap(const Graph& g, const SearchObjective& objective) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.size());
  if (m == 0) return std::nullopt;
  switch (objective.kind) {
    case SearchObjectiveKind::th1: {
      if (static_cast<std::int64_t>(clique_number(g)) > objective.r) return std::nullopt;
      auto eig = symmetric_eigenvalues(laplacian_matrix(g), g.order()).values;
      const double lambda = *std::max_element(eig.begin(), eig.end());
      return lambda - th1_bound(n, m, objective.r).to_double();
    }
    case SearchObjectiveKind::th2: {
      auto eig = symmetric_eigenvalues(laplacian_matrix(g), g.order()).values;
      const double lambda = *std::max_element(eig.begin(), eig.end());
      return lambda - th2_l2_bound(n, m, triangle_stats(g).t_total).to_double();
    }
    case SearchObjectiveKind::th3: {
      auto eig = symmetric_eigenvalues(adjacency_matrix(g), g.order()).values;
      const double mu = *std::min_element(eig.begin(), eig.end());
      return th3_bound(n, m, triangle_stats(g).t_total).to_double() - mu;
    }
  }
  return std::nullopt;
}

namespace {

struct RestartOutcome {
  bool feasible = false;
  SearchWitness witness;
  std::uint64_t evaluations = 0;
};

RestartOutcome run_restart(const SearchConfig& cfg, std::int64_t m_max, std::size_t index) {
  RestartOutcome out;
  SplitMix64 rng = SplitMix64(cfg.seed).stream(index);
  const std::size_t n = cfg.n;

  std::vector<Edge> pairs;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);

  // Random start: add shuffled pairs while the objective's hypothesis survives.
  const auto span = static_cast<std::uint64_t>(m_max - cfg.m_min + 1);
  const std::int64_t m_target = cfg.m_min + static_cast<std::int64_t>(rng.below(span));
  Graph g = Graph::empty(n);
  const bool needs_clique_check = cfg.objective.kind == SearchObjectiveKind::th1;
  for (auto [u, v] : pairs) {
    if (static_cast<std::int64_t>(g.size()) >= m_target) break;
    Graph next = g.with_toggled(u, v);
    if (needs_clique_check && static_cast<std::int64_t>(clique_number(next)) > cfg.objective.r) continue;
    g = std::move(next);
  }
  auto current = objective_gap(g, cfg.objective);
  ++out.evaluations;
  if (static_cast<std::int64_t>(g.size()) < cfg.m_min || !current) return out;

  std::size_t steps = 0;
  for (; steps < cfg.iterations; ++steps) {
    std::optional<double> best_gap;
    Edge best_pair{};
    for (auto [u, v] : pairs) {
      const std::int64_t m_next = static_cast<std::int64_t>(g.size()) + (g.adjacent(u, v) ? -1 : 1);
      if (m_next < cfg.m_min || m_next > m_max) continue;
      const auto gap = objective_gap(g.with_toggled(u, v), cfg.objective);
      ++out.evaluations;
      if (gap && (!best_gap || *gap < *best_gap)) {
        best_gap = gap;
        best_pair = {u, v};
      }
    }
    if (!best_gap || *best_gap >= *current) break;
    g = g.with_toggled(best_pair.first, best_pair.second);
    current = best_gap;
  }

  out.feasible = true;
  out.witness = {to_graph6(g), static_cast<std::int64_t>(g.size()), *current, index, steps};
  return out;
}

}  // namespace

SearchResult search_extremal(const SearchConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("search: n must be at least 2");
  const auto pairs = static_cast<std::int64_t>(cfg.n * (cfg.n - 1) / 2);
  const std::int64_t m_max = cfg.m_max < 0 ? pairs : cfg.m_max;
  if (cfg.m_min < 1 || cfg.m_min > m_max || m_max > pairs)
    throw std::invalid_argument("search: need 1 <= m_min <= m_max <= n(n-1)/2");

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < cfg.restarts; i = next.fetch_add(1))
      outcomes[i] = run_restart(cfg, m_max, i);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, cfg.restarts));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult res;
  std::vector<SearchWitness> found;
  for (auto& o : outcomes) {
    res.evaluations += o.evaluations;
    if (!o.feasible) continue;
    ++res.feasible_restarts;
    found.push_back(std::move(o.witness));
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.gap != b.gap) return a.gap < b.gap;
    return a.restart < b.restart;
  });
  for (auto& w : found) {
    if (res.best.size() >= cfg.keep) break;
    const bool seen = std::any_of(res.best.begin(), res.best.end(), [&](const auto& b) { return b.graph6 == w.graph6; });
    if (!seen) res.best.push_back(std::move(w));
  }
  return res;
}

}  // namespace specgraph
