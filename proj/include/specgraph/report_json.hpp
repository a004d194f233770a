#pragma once

#include "json.hpp"
#include "specgraph/bounds.hpp"
#include "specgraph/harness.hpp"
#include "specgraph/rational.hpp"
#include "specgraph/search.hpp"

namespace specgraph {

/// {"num": n, "den": d, "value": double}. num/den are JSON integers when they
/// fit in 64 bits and decimal strings otherwise.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const BoundEntry& e);
nlohmann::json to_json(const BoundReport& rep);
nlohmann::json to_json(const SuiteReport& rep);
nlohmann::json to_json(const LemmaSampleResult& res);
nlohmann::json to_json(const SearchResult& res, const SearchConfig& config);

}  // namespace specgraph
