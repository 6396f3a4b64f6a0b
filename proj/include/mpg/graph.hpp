#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mpg {

inline constexpr int max_vertices = 256;

// ---- fixed 256-bit vertex set ----

struct VertexSet {
  std::array<std::uint64_t, 4> w{};

  static VertexSet full(int n) {
    VertexSet s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool none() const { return !(w[0] | w[1] | w[2] | w[3]); }

  // lowest member, -1 when empty
  int first() const {
    for (int i = 0; i < 4; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }
  // lowest member greater than i, -1 when none
  int next(int i) const {
    ++i;
    if (i >= max_vertices) return -1;
    int wi = i >> 6;
    std::uint64_t x = w[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (x) return wi * 64 + std::countr_zero(x);
      if (++wi == 4) return -1;
      x = w[wi];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    for (int i = 0; i < 4; ++i) a.w[i] &= b.w[i];
    return a;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) {
    for (int i = 0; i < 4; ++i) a.w[i] |= b.w[i];
    return a;
  }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) {
    for (int i = 0; i < 4; ++i) a.w[i] ^= b.w[i];
    return a;
  }
  // a minus b
  friend VertexSet operator-(VertexSet a, const VertexSet& b) {
    for (int i = 0; i < 4; ++i) a.w[i] &= ~b.w[i];
    return a;
  }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w == b.w; }
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.w < b.w; }
};

// ---- simple undirected graph, bitset adjacency rows ----
// invariants: no loops, adj symmetric, all bits >= n clear

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_)) {}

  int order() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].reset(v);
    adj_[v].reset(u);
  }

  const VertexSet& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  VertexSet closed_neighborhood(int v) const {
    VertexSet s = neighbors(v);
    s.set(v);
    return s;
  }

  int degree(int v) const { return neighbors(v).count(); }

  int edge_count() const {
    int total = 0;
    for (const auto& row : adj_) total += row.count();
    return total / 2;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  static int checked_order(int n) {
    if (n < 0 || n > max_vertices) throw std::invalid_argument("graph order out of range");
    return n;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// interchange form: n plus sorted (u,v) pairs with u < v
struct EdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph make_graph(const EdgeList& el) { return make_graph(el.n, el.edges); }

inline EdgeList edge_list(const Graph& g) {
  EdgeList el;
  el.n = g.order();
  for (int u = 0; u < g.order(); ++u)
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
      el.edges.emplace_back(u, v);
  return el;
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

// remaining vertices relabeled order-preservingly
inline Graph delete_vertex(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  Graph h(n - 1);
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    for (int x = g.neighbors(u).next(u); x >= 0; x = g.neighbors(u).next(x))
      if (x != v) h.add_edge(shift(u), shift(x));
  }
  return h;
}

// s must be strictly ascending; vertex s[i] becomes i
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.order()) throw std::invalid_argument("vertex out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("vertex set not ascending");
  }
  Graph h(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, s.members());
}

// vacuously true for n <= 1
inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  VertexSet seen;
  seen.set(0);
  VertexSet frontier = seen;
  while (!frontier.none()) {
    VertexSet nxt;
    for (int v = frontier.first(); v >= 0; v = frontier.next(v))
      nxt = nxt | g.neighbors(v);
    frontier = nxt - seen;
    seen = seen | nxt;
  }
  return seen.count() == n;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

inline std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return 0;
  int k = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

// one count per triangle: common neighborhood of each edge, restricted above v
inline long long triangle_count(const Graph& g) {
  long long total = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      for (int x = common.next(v); x >= 0; x = common.next(x)) ++total;
    }
  return total;
}

// cross-check path: tr(A^3)/6 by integer matrix product
inline long long triangle_count_trace(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) a[u][v] = g.has_edge(u, v) && u != v ? 1 : 0;
  long long trace = 0;
  for (int u = 0; u < n; ++u) {
    // row u of A^2 restricted to what the trace needs
    for (int v = 0; v < n; ++v) {
      long long a2 = 0;
      for (int x = 0; x < n; ++x) a2 += a[u][x] * a[x][v];
      trace += a2 * a[v][u];
    }
  }
  return trace / 6;
}

}  // namespace mpg
