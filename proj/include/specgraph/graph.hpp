#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specgraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input (bad vertex ids, loops, corrupt graph6).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-universe vertex set packed into 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  std::size_t count() const;
  bool empty() const;
  std::vector<Vertex> members() const;

  /// Complement within the universe.
  VertexSet operator~() const;
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bit-packed adjacency rows.
class Graph {
 public:
  /// Edges may repeat (collapsed); loops and out-of-range endpoints throw GraphError.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph empty(std::size_t n) { return from_edge_list(n, std::span<const Edge>{}); }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex u) const { return {bits_.data() + u * words_, words_}; }
  bool adjacent(Vertex u, Vertex v) const { return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U; }
  std::size_t degree(Vertex u) const;
  std::size_t max_degree() const;
  VertexSet neighbors(Vertex u) const;
  std::vector<Edge> edges() const;

  /// Copy with the pair {u, v} flipped between edge and non-edge.
  Graph with_toggled(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  Graph(std::size_t n);
  void set_edge(Vertex u, Vertex v, bool present);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;

  friend Graph complement(const Graph& g);
  friend Graph graph_from_mask(std::size_t n, std::uint64_t mask);
};

/// Edge uv present iff absent in g (u != v).
Graph complement(const Graph& g);

/// Graph whose k-th possible edge, in graph6 pair order (0,1),(0,2),(1,2),(0,3),...,
/// is present iff bit k of mask is set. Requires n*(n-1)/2 <= 64.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t graph_to_mask(const Graph& g);

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads "n m" followed by m lines "u v". Returns false at clean end of input.
/// Malformed blocks throw GraphError.
bool read_edge_list(std::istream& in, Graph& out);
std::string to_edge_list(const Graph& g);

struct DegreeStats {
  std::int64_t m = 0;
  std::vector<std::int64_t> degrees;
  std::int64_t sum_d2 = 0;
  std::int64_t sum_d3 = 0;
  std::int64_t edge_deg_prod = 0;  // sum over edges uv of d(u)d(v)
};

struct TriangleStats {
  std::int64_t t_total = 0;
  std::vector<std::int64_t> t_at;        // edges inside N(u)
  std::vector<std::int64_t> t_prime_at;  // edges with both ends outside N(u)
};

DegreeStats degree_stats(const Graph& g);
TriangleStats triangle_stats(const Graph& g);

/// e(S): edges with both ends in s.
std::int64_t edges_within(const Graph& g, const VertexSet& s);
/// e(A, B) for disjoint a and b.
std::int64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace specgraph
