#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

enum class SearchObjectiveKind { th1, th2, th3 };

/// Which bound's gap to minimize: "min-gap-th1:<r>", "min-gap-th2" (lambda_n
/// against the triangle-count lower bound) or "min-gap-th3" (mu_n).
struct SearchObjective {
  SearchObjectiveKind kind = SearchObjectiveKind::th3;
  std::int64_t r = 2;  // th1 only

  static SearchObjective parse(std::string_view text);  // throws std::invalid_argument
  std::string to_string() const;
};

/// Signed gap (>= 0 when the bound holds) or nullopt when g falls outside the
/// bound's hypothesis (m = 0, or clique number > r for th1).
std::optional<double> objective_gap(const Graph& g, const SearchObjective& objective);

struct SearchConfig {
  std::size_t n = 8;
  std::int64_t m_min = 1;
  std::int64_t m_max = -1;  // -1: n(n-1)/2
  SearchObjective objective;
  std::size_t restarts = 64;
  std::size_t iterations = 200;  // hill-climbing steps per restart
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::size_t keep = 5;
};

struct SearchWitness {
  std::string graph6;
  std::int64_t m = 0;
  double gap = 0.0;
  std::size_t restart = 0;
  std::size_t steps = 0;
};

struct SearchResult {
  std::vector<SearchWitness> best;  // ascending gap, distinct graphs
  std::size_t feasible_restarts = 0;
  std::uint64_t evaluations = 0;
};

/// Random restarts followed by steepest-descent single-edge toggles that stay
/// inside [m_min, m_max] and the objective's hypothesis. Restart k draws from
/// SplitMix64(seed).stream(k), so results do not depend on the worker count.
SearchResult search_extremal(const SearchConfig& config);

}  // namespace specgraph
