#include "specgraph/report_json.hpp"

#include <limits>

namespace specgraph {

using nlohmann::json;

namespace {

json int128_json(int128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return int128_to_string(v);
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const Rational& r) {
  return json{{"num", int128_json(r.num())}, {"den", int128_json(r.den())}, {"value", r.to_double()}};
}

json to_json(const BoundEntry& e) {
  json j;
  j["key"] = e.key();
  j["name"] = e.name;
  if (e.r) j["r"] = *e.r;
  if (e.epsilon) j["epsilon"] = *e.epsilon;
  j["hypothesis"] = to_string(e.hypothesis);
  j["verdict"] = to_string(e.verdict);
  if (!e.reason.empty()) j["reason"] = e.reason;
  if (e.hypothesis == Hypothesis::holds && e.verdict != Verdict::not_applicable) {
    j["bound"] = e.bound ? to_json(*e.bound) : json(nullptr);
    j["bound_value"] = optional_json(e.bound_value);
    j["observed"] = optional_json(e.observed);
    j["gap"] = optional_json(e.gap);
    j["equality"] = e.equality;
    j["predicted_equality"] = optional_json(e.predicted_equality);
    j["agreement"] = optional_json(e.agreement);
  }
  return j;
}

json to_json(const BoundReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) entries.push_back(to_json(e));
  json parts = json::array();
  for (auto p : rep.multipartite.parts) parts.push_back(p);
  return json{{"graph6", rep.graph6},
              {"n", rep.n},
              {"m", rep.m},
              {"t", rep.t},
              {"lambda_n", rep.lambda_n},
              {"mu_n", rep.mu_n},
              {"spectrum_tol", rep.spectrum_tol},
              {"clique_number", rep.clique_number},
              {"regular", rep.regular},
              {"complete_multipartite", rep.multipartite.is_multipartite},
              {"parts", parts},
              {"violation", rep.any_violation()},
              {"disagreement", rep.any_disagreement()},
              {"bounds", entries}};
}

json to_json(const SuiteReport& rep) {
  json checks = json::object();
  for (const auto& [key, t] : rep.checks) {
    checks[key] = json{{"passed", t.passed},
                       {"violated", t.violated},
                       {"not_applicable", t.not_applicable},
                       {"flagged", t.flagged},
                       {"worst_margin", optional_json(t.worst_margin)}};
  }
  json censuses = json::object();
  for (const auto& [key, c] : rep.censuses) {
    censuses[key] = json{{"relation", c.relation},
                         {"predicate", c.predicate},
                         {"numeric_equalities", c.numeric},
                         {"structural_predictions", c.structural},
                         {"both", c.both},
                         {"mismatches", c.mismatches},
                         {"witnesses", c.witnesses},
                         {"mismatch_witnesses", c.mismatch_witnesses}};
  }
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back(json{{"check", v.check}, {"graph6", v.graph6}, {"detail", v.detail}});

  json j{{"n_min", rep.n_min},
         {"n_max", rep.n_max},
         {"graphs", rep.graphs},
         {"graphs_per_order", rep.graphs_per_order},
         {"checks", checks},
         {"censuses", censuses},
         {"violation_total", rep.violation_total},
         {"census_mismatch_total", rep.census_mismatch_total},
         {"violations", violations},
         {"clean", rep.clean()}};
  if (rep.wall_time_s) j["wall_time_s"] = *rep.wall_time_s;
  return j;
}

json to_json(const LemmaSampleResult& res) {
  return json{{"n", res.n},
              {"s", res.s},
              {"floor", res.floor},
              {"min_value", res.min_value},
              {"margin", res.margin},
              {"argmin", res.argmin},
              {"samples", res.samples},
              {"probes", res.probes},
              {"uniform_error", res.uniform_error},
              {"violated", res.violated}};
}

json to_json(const SearchResult& res, const SearchConfig& config) {
  json best = json::array();
  for (const auto& w : res.best)
    best.push_back(
        json{{"graph6", w.graph6}, {"m", w.m}, {"gap", w.gap}, {"restart", w.restart}, {"steps", w.steps}});
  return json{{"objective", config.objective.to_string()},
              {"n", config.n},
              {"m_min", config.m_min},
              {"m_max", config.m_max},
              {"restarts", config.restarts},
              {"iterations", config.iterations},
              {"seed", config.seed},
              {"feasible_restarts", res.feasible_restarts},
              {"evaluations", res.evaluations},
              {"best", best}};
}

}  // namespace specgraph
