#pragma once

#include "mpg/graph.hpp"
#include "mpg/verify.hpp"

namespace mpg {

// circulant on 0..n-1 with difference set {k, ..., 2k-1}
struct CirculantSpec {
  int n = 0;
  int k = 0;
};

inline bool paper_regime(const CirculantSpec& s) {
  return s.n >= 5 && (s.n % 6 == 0 || s.n % 6 == 5) && s.k == (s.n + 2) / 6;
}

inline Graph g_circulant(const CirculantSpec& s) {
  if (s.n < 1 || s.k < 1) throw std::invalid_argument("circulant needs n >= 1, k >= 1");
  Graph g(s.n);
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) {
      int d = (j - i) % s.n;
      int e = s.n - d;
      if ((d >= s.k && d <= 2 * s.k - 1) || (e >= s.k && e <= 2 * s.k - 1)) g.add_edge(i, j);
    }
  return g;
}

// three blocks of k consecutive vertices per third; the last block is one
// vertex short when n = 6k-1
inline Coloring block_coloring(const CirculantSpec& s) {
  if (!paper_regime(s))
    throw std::invalid_argument("block coloring needs n = 0 or 5 (mod 6) with k = (n+2)/6");
  Coloring c;
  c.palette = 3;
  for (int v = 0; v < s.n; ++v) c.colors.push_back((v / s.k) % 3);
  return c;
}

inline MinimalityReport family_check(const CirculantSpec& s) {
  if (!paper_regime(s)) throw std::invalid_argument("family check needs the n = 0, 5 (mod 6) regime");
  return check_minimal_prime_graph(complement(g_circulant(s)));
}

struct SuperBaseReport {
  bool is_super = false;
  std::vector<MinimalityReport> deletions;  // one per vertex, in vertex order
};

// a super base graph is generated from no minimal prime graph: every
// single-vertex deletion fails the minimality check
inline SuperBaseReport is_super_base(const Graph& g) {
  if (!check_minimal_prime_graph(g).is_minimal)
    throw std::invalid_argument("is_super_base requires a minimal prime graph");
  SuperBaseReport r;
  r.is_super = true;
  for (int v = 0; v < g.order(); ++v) {
    r.deletions.push_back(check_minimal_prime_graph(delete_vertex(g, v)));
    if (r.deletions.back().is_minimal) r.is_super = false;
  }
  return r;
}

}  // namespace mpg
