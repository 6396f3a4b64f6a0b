#pragma once

#include <map>

#include "mpg/graph.hpp"

namespace mpg {

// new vertex n adjacent to exactly N[v]
inline Graph duplicate_vertex(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  if (n + 1 > max_vertices) throw std::length_error("duplication exceeds vertex cap");
  Graph h(n + 1);
  for (auto [a, b] : edge_list(g).edges) h.add_edge(a, b);
  VertexSet nb = g.closed_neighborhood(v);
  for (int u = nb.first(); u >= 0; u = nb.next(u)) h.add_edge(n, u);
  return h;
}

// classes of N[.]-equality, ordered by smallest member
struct TwinPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> sizes;
};

inline TwinPartition twin_partition(const Graph& g) {
  std::map<VertexSet, std::vector<int>> by_key;
  for (int v = 0; v < g.order(); ++v) by_key[g.closed_neighborhood(v)].push_back(v);
  std::vector<std::vector<int>> classes;
  for (auto& [key, members] : by_key) classes.push_back(members);
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  TwinPartition p;
  for (auto& c : classes) {
    p.sizes.push_back(static_cast<int>(c.size()));
    p.classes.push_back(std::move(c));
  }
  return p;
}

inline bool is_base_graph(const Graph& g) {
  for (const auto& c : twin_partition(g).classes)
    if (c.size() > 1) return false;
  return true;
}

// quotient by the twin partition, smallest member representing each class
inline Graph base_graph(const Graph& g) {
  TwinPartition p = twin_partition(g);
  std::vector<int> reps;
  for (const auto& c : p.classes) reps.push_back(c.front());
  return induced_subgraph(g, reps);
}

// multiplicity vector over a base graph; matrix = Adjacency(base) + I
struct DuplicationVector {
  int base_n = 0;
  std::vector<int> w;
  std::vector<std::vector<int>> matrix;
};

inline DuplicationVector make_duplication_vector(const Graph& base, std::vector<int> w) {
  if (static_cast<int>(w.size()) != base.order())
    throw std::invalid_argument("duplication vector length mismatch");
  for (int x : w)
    if (x < 0) throw std::invalid_argument("duplication counts must be nonnegative");
  DuplicationVector d;
  d.base_n = base.order();
  d.w = std::move(w);
  d.matrix.assign(d.base_n, std::vector<int>(d.base_n, 0));
  for (int i = 0; i < d.base_n; ++i) {
    d.matrix[i][i] = 1;
    for (int j = 0; j < d.base_n; ++j)
      if (base.has_edge(i, j)) d.matrix[i][j] = 1;
  }
  return d;
}

inline Graph make_c5() {
  return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

inline DuplicationVector c5_duplication_vector(std::vector<int> w) {
  return make_duplication_vector(make_c5(), std::move(w));
}

// exact integer determinant, fraction-free elimination
inline long long duplication_matrix_det(const DuplicationVector& d) {
  int n = d.base_n;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = d.matrix[i][j];
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// duplicates vertex i of the base exactly w_i times, ascending i, duplicates appended
inline Graph build_reseminant(const Graph& base, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != base.order())
    throw std::invalid_argument("duplication vector length mismatch");
  Graph g = base;
  for (int i = 0; i < base.order(); ++i)
    for (int t = 0; t < w[i]; ++t) g = duplicate_vertex(g, i);
  return g;
}

inline Graph build_reseminant(const Graph& base, const DuplicationVector& d) {
  if (d.base_n != base.order()) throw std::invalid_argument("duplication vector base mismatch");
  return build_reseminant(base, d.w);
}

// v = A w + 2*1, the per-class degrees of the C5 reseminant
inline std::vector<int> degree_vector(const DuplicationVector& d) {
  if (d.base_n != 5) throw std::invalid_argument("degree_vector needs the C5 model");
  std::vector<int> v(5, 0);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) v[i] += d.matrix[i][j] * d.w[j];
    v[i] += 2;
  }
  return v;
}

struct RegularityVerdict {
  bool regular = false;
  std::optional<int> k;  // k = 2 + 3h
  std::optional<int> h;  // n = 5 + 5h
};

// regular iff w is constant; h >= 0 admitted
inline RegularityVerdict regular_reseminant_verdict(const DuplicationVector& d) {
  if (d.base_n != 5) throw std::invalid_argument("verdict needs the C5 model");
  RegularityVerdict verdict;
  if (std::all_of(d.w.begin(), d.w.end(), [&](int x) { return x == d.w[0]; })) {
    int h = d.w.empty() ? 0 : d.w[0];
    verdict.regular = true;
    verdict.k = 2 + 3 * h;
    verdict.h = h;
  }
  return verdict;
}

}  // namespace mpg
