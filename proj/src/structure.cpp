#include "specgraph/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specgraph {

namespace {

// Single-word vertex sets for n <= 64.
struct WordSets {
  using Set = std::uint64_t;
  std::vector<Set> adj;

  explicit WordSets(const Graph& g) : adj(g.order()) {
    for (Vertex u = 0; u < g.order(); ++u) adj[u] = g.row(u)[0];
  }
  static std::size_t count(Set s) { return static_cast<std::size_t>(std::popcount(s)); }
  static bool empty(Set s) { return s == 0; }
  static Set intersect(Set a, Set b) { return a & b; }
  static Set minus(Set a, Set b) { return a & ~b; }
  static void erase(Set& s, Vertex v) { s &= ~(Set{1} << v); }
  static Vertex first(Set s) { return static_cast<Vertex>(std::countr_zero(s)); }
  template <typename Fn>
  static void for_each(Set s, Fn&& fn) {
    while (s) {
      fn(static_cast<Vertex>(std::countr_zero(s)));
      s &= s - 1;
    }
  }
  Set all(std::size_t n) const { return n == 64 ? ~Set{0} : (Set{1} << n) - 1; }
};

struct MultiWordSets {
  using Set = VertexSet;
  std::vector<Set> adj;

  explicit MultiWordSets(const Graph& g) {
    adj.reserve(g.order());
    for (Vertex u = 0; u < g.order(); ++u) adj.push_back(g.neighbors(u));
  }
  static std::size_t count(const Set& s) { return s.count(); }
  static bool empty(const Set& s) { return s.empty(); }
  static Set intersect(const Set& a, const Set& b) { return a & b; }
  static Set minus(const Set& a, const Set& b) { return a & ~b; }
  static void erase(Set& s, Vertex v) { s.erase(v); }
  static Vertex first(const Set& s) {
    const auto words = s.words();
    std::size_t i = 0;
    while (words[i] == 0) ++i;
    return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words[i])));
  }
  template <typename Fn>
  static void for_each(const Set& s, Fn&& fn) {
    for (Vertex v : s.members()) fn(v);
  }
  Set all(std::size_t n) const { return VertexSet::full(n); }
};

template <typename Sets>
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : sets_(g), n_(g.order()) {}

  std::size_t run() {
    best_ = 0;
    expand(0, sets_.all(n_));
    return best_;
  }

 private:
  using Set = typename Sets::Set;

  // Greedy colouring of the candidates bounds any clique inside them by the colour count.
  void expand(std::size_t depth, Set candidates) {
    if (Sets::empty(candidates)) {
      best_ = std::max(best_, depth);
      return;
    }
    std::vector<std::pair<Vertex, std::size_t>> order;
    Set uncolored = candidates;
    for (std::size_t color = 1; !Sets::empty(uncolored); ++color) {
      Set open = uncolored;
      while (!Sets::empty(open)) {
        const Vertex v = Sets::first(open);
        Sets::erase(open, v);
        Sets::erase(uncolored, v);
        open = Sets::minus(open, sets_.adj[v]);
        order.emplace_back(v, color);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (depth + it->second <= best_) return;
      expand(depth + 1, Sets::intersect(candidates, sets_.adj[it->first]));
      Sets::erase(candidates, it->first);
    }
  }

  Sets sets_;
  std::size_t n_;
  std::size_t best_ = 0;
};

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t r) : g_(g), r_(r), on_path_(g.order()) {}

  bool run() {
    const std::size_t n = g_.order();
    for (Vertex anchor = 0; anchor + r_ <= n; ++anchor) {
      anchor_ = anchor;
      on_path_.insert(anchor);
      const bool found = extend(anchor, 1);
      on_path_.erase(anchor);
      if (found) return true;
    }
    return false;
  }

 private:
  // Cycles are found from their minimum vertex, so only larger vertices extend the path.
  bool extend(Vertex tip, std::size_t length) {
    if (length == r_) return g_.adjacent(tip, anchor_);
    for (Vertex w : g_.neighbors(tip).members()) {
      if (w <= anchor_ || on_path_.contains(w)) continue;
      on_path_.insert(w);
      const bool found = extend(w, length + 1);
      on_path_.erase(w);
      if (found) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t r_;
  Vertex anchor_ = 0;
  VertexSet on_path_;
};

}  // namespace

std::size_t clique_number(const Graph& g) {
  if (g.order() <= 64) return MaxCliqueSearch<WordSets>(g).run();
  return MaxCliqueSearch<MultiWordSets>(g).run();
}

MultipartiteCertificate complete_multipartite_certificate(const Graph& g) {
  const std::size_t n = g.order();
  MultipartiteCertificate cert;

  // Non-adjacency must be an equivalence relation: each vertex's closed
  // non-neighborhood is its part, and parts must agree for all members.
  std::vector<int> part_of(n, -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex u = 0; u < n; ++u) {
    if (part_of[u] >= 0) continue;
    const VertexSet cls = ~g.neighbors(u);
    const auto members = cls.members();
    for (Vertex v : members) {
      if (part_of[v] >= 0) return cert;
      if (g.neighbors(v) != g.neighbors(u)) return cert;
      part_of[v] = static_cast<int>(parts.size());
    }
    parts.push_back(members);
  }

  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  cert.is_multipartite = true;
  for (auto& p : parts) {
    cert.parts.push_back(p.size());
    cert.members.push_back(std::move(p));
  }
  return cert;
}

bool is_regular(const Graph& g) {
  const std::size_t d0 = g.degree(0);
  for (Vertex u = 1; u < g.order(); ++u)
    if (g.degree(u) != d0) return false;
  return true;
}

bool is_regular_complete_r_partite(const Graph& g, std::size_t r) {
  if (r < 1) throw std::invalid_argument("is_regular_complete_r_partite: r must be positive");
  const auto cert = complete_multipartite_certificate(g);
  if (!cert.is_multipartite || cert.parts.size() != r) return false;
  return cert.parts.front() == cert.parts.back();
}

bool is_regular_complete_multipartite(const Graph& g) {
  const auto cert = complete_multipartite_certificate(g);
  return cert.is_multipartite && cert.parts.front() == cert.parts.back();
}

bool contains_cycle_of_length(const Graph& g, std::size_t r) {
  if (r < 3 || r > g.order())
    throw std::invalid_argument("contains_cycle_of_length: r=" + std::to_string(r) + " outside [3, n]");
  return CycleSearch(g, r).run();
}

}  // namespace specgraph
