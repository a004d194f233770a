#include "specgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "specgraph/checked.hpp"

namespace specgraph {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

std::uint64_t tail_mask(std::size_t n) {
  const std::size_t r = n & 63;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

template <typename Fn>
void for_each_member(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

constexpr int kGraph6Offset = 63;
constexpr std::size_t kGraph6MaxOrder = 258047;

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe) throw GraphError("vertex " + std::to_string(v) + " outside universe");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::full(std::size_t universe) { return ~VertexSet(universe); }

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for_each_member(words_, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::operator~() const {
  VertexSet out(*this);
  for (auto& w : out.words_) w = ~w;
  if (!out.words_.empty()) out.words_.back() &= tail_mask(universe_);
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n) : n_(n), words_(word_count(n)), bits_(n * word_count(n), 0) {
  if (n == 0) throw GraphError("graph must have at least one vertex");
}

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  const bool had = adjacent(u, v);
  if (had == present) return;
  const std::uint64_t bu = std::uint64_t{1} << (u & 63);
  const std::uint64_t bv = std::uint64_t{1} << (v & 63);
  if (present) {
    bits_[u * words_ + (v >> 6)] |= bv;
    bits_[v * words_ + (u >> 6)] |= bu;
    ++m_;
  } else {
    bits_[u * words_ + (v >> 6)] &= ~bv;
    bits_[v * words_ + (u >> 6)] &= ~bu;
    --m_;
  }
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    g.set_edge(u, v, true);
  }
  return g;
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

VertexSet Graph::neighbors(Vertex u) const {
  VertexSet s(n_);
  for_each_member(row(u), [&](Vertex v) { s.insert(v); });
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for_each_member(row(u), [&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::with_toggled(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) throw GraphError("invalid vertex pair for toggle");
  Graph g(*this);
  g.set_edge(u, v, !adjacent(u, v));
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.n_);
  const std::uint64_t tail = tail_mask(g.n_);
  for (Vertex u = 0; u < g.n_; ++u) {
    for (std::size_t w = 0; w < g.words_; ++w) out.bits_[u * g.words_ + w] = ~g.bits_[u * g.words_ + w];
    out.bits_[u * g.words_ + g.words_ - 1] &= tail;
    out.bits_[u * g.words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  }
  const std::size_t pairs = g.n_ * (g.n_ - 1) / 2;
  out.m_ = pairs - g.m_;
  return out;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  if (n * (n - 1) / 2 > 64) throw GraphError("mask enumeration supports at most 64 vertex pairs");
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) g.set_edge(i, j, true);
  return g;
}

std::uint64_t graph_to_mask(const Graph& g) {
  const std::size_t n = g.order();
  if (n * (n - 1) / 2 > 64) throw GraphError("mask enumeration supports at most 64 vertex pairs");
  std::uint64_t mask = 0;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << k;
  return mask;
}

// ---------------------------------------------------------------------------
// graph6

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw GraphError("graph6: empty string");
  for (char c : text) {
    if (c < 63 || c > 126) throw GraphError("graph6: byte out of range");
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - kGraph6Offset);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw GraphError("graph6: 8-byte order encoding not supported");
    if (text.size() < 4) throw GraphError("graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - kGraph6Offset);
    if (n < 63) throw GraphError("graph6: non-canonical long order field");
    pos = 4;
  }
  if (n == 0) throw GraphError("graph6: graph must have at least one vertex");

  const std::size_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw GraphError("graph6: expected " + std::to_string(nbytes) + " data bytes, found " +
                     std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kGraph6Offset;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const int last = text.back() - kGraph6Offset;
    const int pad = static_cast<int>(6 - nbits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw GraphError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph6: order too large");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text

bool read_edge_list(std::istream& in, Graph& out) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n)) {
    if (in.eof()) return false;
    throw GraphError("edge list: expected 'n m' header");
  }
  if (!(in >> m)) throw GraphError("edge list: expected edge count after n");
  if (n < 1) throw GraphError("edge list: n must be positive");
  if (m < 0) throw GraphError("edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw GraphError("edge list: truncated after " + std::to_string(i) + " edges");
    if (u < 0 || v < 0) throw GraphError("edge list: negative vertex id");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  out = Graph::from_edge_list(static_cast<std::size_t>(n), edges);
  return true;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Aggregates

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  const std::size_t n = g.order();
  s.degrees.resize(n);
  for (Vertex u = 0; u < n; ++u) s.degrees[u] = static_cast<std::int64_t>(g.degree(u));
  s.m = static_cast<std::int64_t>(g.size());
  for (auto d : s.degrees) {
    const std::int64_t d2 = checked_mul(d, d);
    s.sum_d2 = checked_add(s.sum_d2, d2);
    s.sum_d3 = checked_add(s.sum_d3, checked_mul(d2, d));
  }
  for (Vertex u = 0; u < n; ++u)
    for_each_member(g.row(u), [&](Vertex v) {
      if (u < v) s.edge_deg_prod = checked_add(s.edge_deg_prod, checked_mul(s.degrees[u], s.degrees[v]));
    });
  return s;
}

TriangleStats triangle_stats(const Graph& g) {
  const std::size_t n = g.order();
  TriangleStats s;
  s.t_at.resize(n);
  s.t_prime_at.resize(n);
  std::int64_t sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet nbr = g.neighbors(u);
    const VertexSet rest = ~nbr;
    s.t_at[u] = edges_within(g, nbr);
    s.t_prime_at[u] = edges_within(g, rest);
    sum += s.t_at[u];
  }
  s.t_total = sum / 3;
  return s;
}

std::int64_t edges_within(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  for_each_member(s.words(), [&](Vertex v) { twice += and_popcount(g.row(v), s.words()); });
  return static_cast<std::int64_t>(twice / 2);
}

std::int64_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t c = 0;
  for_each_member(a.words(), [&](Vertex v) { c += and_popcount(g.row(v), b.words()); });
  return static_cast<std::int64_t>(c);
}

}  // namespace specgraph
