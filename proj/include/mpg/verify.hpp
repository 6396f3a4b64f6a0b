#pragma once

#include <array>

#include "mpg/coloring.hpp"
#include "mpg/graph.hpp"

namespace mpg {

// first triangle in (u,v,x) lexicographic order
inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      int x = common.next(v);
      if (x >= 0) return std::array<int, 3>{u, v, x};
    }
  return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

// complement is triangle-free and 3-colorable
inline bool is_solvable_prime_graph(const Graph& g) {
  Graph c = complement(g);
  return is_triangle_free(c) && find_3_coloring(c).has_value();
}

enum class FailureKind { triangle_survives, coloring_survives };

struct MinimalityReport {
  bool is_solvable = false;
  bool is_minimal = false;
  std::optional<std::pair<int, int>> failing_edge;
  std::optional<FailureKind> failure_kind;
  // when not solvable because of a complement triangle
  std::optional<std::array<int, 3>> triangle_witness;
  // the coloring that survives deleting failing_edge
  std::optional<Coloring> coloring_witness;
};

// minimal: connected, n >= 2, solvable, and deleting any edge breaks
// triangle-freeness or 3-colorability of the complement
inline MinimalityReport check_minimal_prime_graph(const Graph& g) {
  MinimalityReport r;
  Graph comp = complement(g);
  if (auto tri = find_triangle(comp)) {
    r.triangle_witness = tri;
    return r;
  }
  auto base_coloring = find_3_coloring(comp);
  if (!base_coloring) return r;
  r.is_solvable = true;
  if (g.order() < 2 || !is_connected(g)) return r;
  // deleting edge e of g adds e to the complement; since comp is triangle-free,
  // any new triangle goes through e
  for (auto [u, v] : edge_list(g).edges) {
    if (!(comp.neighbors(u) & comp.neighbors(v)).none()) continue;
    Graph h = comp;
    h.add_edge(u, v);
    if (auto c = find_3_coloring(h)) {
      r.failing_edge = {u, v};
      r.failure_kind = FailureKind::coloring_survives;
      r.coloring_witness = c;
      return r;
    }
  }
  r.is_minimal = true;
  return r;
}

// non-edges whose addition keeps h triangle-free and 3-colorable
inline std::vector<std::pair<int, int>> addable_edges(const Graph& h) {
  if (find_triangle(h) || !find_3_coloring(h))
    throw std::invalid_argument("addable_edges: graph must be triangle-free and 3-colorable");
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v) {
      if (h.has_edge(u, v)) continue;
      if (!(h.neighbors(u) & h.neighbors(v)).none()) continue;
      Graph h2 = h;
      h2.add_edge(u, v);
      if (find_3_coloring(h2)) out.emplace_back(u, v);
    }
  return out;
}

}  // namespace mpg
