#pragma once

#include <cstddef>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Witness that a graph is complete multipartite: its complement is a
/// disjoint union of cliques whose vertex sets are the parts.
struct MultipartiteCertificate {
  bool is_multipartite = false;
  std::vector<std::size_t> parts;                // sizes, descending; ties by smallest member
  std::vector<std::vector<Vertex>> members;      // vertices of each part, aligned with parts
};

/// Maximum clique size (branch and bound over pivoted Bron-Kerbosch).
std::size_t clique_number(const Graph& g);

MultipartiteCertificate complete_multipartite_certificate(const Graph& g);

bool is_regular(const Graph& g);
bool is_regular_complete_r_partite(const Graph& g, std::size_t r);
bool is_regular_complete_multipartite(const Graph& g);

/// True iff g has a simple cycle on exactly r vertices. Requires 3 <= r <= n.
bool contains_cycle_of_length(const Graph& g, std::size_t r);

}  // namespace specgraph
