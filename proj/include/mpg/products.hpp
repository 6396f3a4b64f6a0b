#pragma once

#include <string>

#include "mpg/canonical.hpp"
#include "mpg/graph.hpp"
#include "mpg/reseminant.hpp"
#include "mpg/verify.hpp"

namespace mpg {

enum class ProductKind { direct, cartesian, strong, complementary_direct, complementary_cartesian };

inline ProductKind product_kind_from_string(const std::string& s) {
  if (s == "direct") return ProductKind::direct;
  if (s == "cartesian") return ProductKind::cartesian;
  if (s == "strong") return ProductKind::strong;
  if (s == "cdirect") return ProductKind::complementary_direct;
  if (s == "ccartesian") return ProductKind::complementary_cartesian;
  throw std::invalid_argument("unknown product kind: " + s);
}

namespace detail {

inline int product_order(const Graph& g, const Graph& h) {
  int n = g.order() * h.order();
  if (n > max_vertices) throw std::length_error("product size over cap");
  return n;
}

}  // namespace detail

// vertex (u,v) indexed u*|V(h)|+v across all three products

// (u,v)~(x,y) iff u~x and v~y; ordered neighbor scans cover each edge twice
inline Graph direct_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  Graph p(detail::product_order(g, h));
  for (int u = 0; u < g.order(); ++u)
    for (int x = g.neighbors(u).first(); x >= 0; x = g.neighbors(u).next(x))
      for (int v = 0; v < nh; ++v)
        for (int y = h.neighbors(v).first(); y >= 0; y = h.neighbors(v).next(y))
          if (u * nh + v < x * nh + y) p.add_edge(u * nh + v, x * nh + y);
  return p;
}

inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  Graph p(detail::product_order(g, h));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < nh; ++v) {
      for (int y = h.neighbors(v).next(v); y >= 0; y = h.neighbors(v).next(y))
        p.add_edge(u * nh + v, u * nh + y);
      for (int x = g.neighbors(u).next(u); x >= 0; x = g.neighbors(u).next(x))
        p.add_edge(u * nh + v, x * nh + v);
    }
  return p;
}

inline Graph strong_product(const Graph& g, const Graph& h) {
  Graph p = cartesian_product(g, h);
  Graph d = direct_product(g, h);
  for (auto [a, b] : edge_list(d).edges) p.add_edge(a, b);
  return p;
}

inline Graph product(ProductKind kind, const Graph& g, const Graph& h) {
  switch (kind) {
    case ProductKind::direct:
      return direct_product(g, h);
    case ProductKind::cartesian:
      return cartesian_product(g, h);
    case ProductKind::strong:
      return strong_product(g, h);
    case ProductKind::complementary_direct:
      return complement(direct_product(complement(g), complement(h)));
    case ProductKind::complementary_cartesian:
      return complement(cartesian_product(complement(g), complement(h)));
  }
  throw std::logic_error("unreachable");
}

inline Graph iterated_complementary_direct(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("iterated product needs t >= 1");
  Graph r = g;
  for (int i = 1; i < t; ++i) r = product(ProductKind::complementary_direct, r, g);
  return r;
}

// left-iterated complementary products of solvable factors stay solvable;
// this check makes that claim executable for a concrete factor list
inline bool check_product_preservation(ProductKind kind, const std::vector<Graph>& gs) {
  if (kind != ProductKind::complementary_direct && kind != ProductKind::complementary_cartesian)
    throw std::invalid_argument("preservation check covers the complementary products");
  if (gs.empty()) throw std::invalid_argument("need at least one factor");
  for (const auto& g : gs)
    if (!is_solvable_prime_graph(g))
      throw std::invalid_argument("factors must be solvable prime graphs");
  Graph r = gs[0];
  for (std::size_t i = 1; i < gs.size(); ++i) r = product(kind, r, gs[i]);
  return is_solvable_prime_graph(r);
}

// diagonal {(u,u)} of g x g; its induced subgraph is a copy of g
inline std::vector<int> diagonal_embedding_witness(const Graph& g) {
  Graph p = direct_product(g, g);
  std::vector<int> diag;
  for (int u = 0; u < g.order(); ++u) diag.push_back(u * g.order() + u);
  if (!is_isomorphic(induced_subgraph(p, diag), g))
    throw std::logic_error("diagonal failed to induce the factor");
  return diag;
}

// explicit isomorphism K_{m+1} (x) g -> duplicate-every-vertex-m-times,
// psi(i,j) = j for i = 0, else the i-th appended duplicate of j
inline std::vector<int> strong_duplication_iso(const Graph& g, int m) {
  const int n = g.order();
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if ((m + 1) * n > max_vertices) throw std::length_error("product size over cap");
  Graph km1(m + 1);
  for (int i = 0; i < m + 1; ++i)
    for (int j = i + 1; j < m + 1; ++j) km1.add_edge(i, j);
  Graph prod = strong_product(km1, g);
  Graph dup = build_reseminant(g, std::vector<int>(static_cast<std::size_t>(n), m));
  std::vector<int> psi(static_cast<std::size_t>((m + 1) * n));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j < n; ++j) psi[i * n + j] = i == 0 ? j : n + j * m + (i - 1);
  std::vector<bool> hit(psi.size(), false);
  for (int x : psi) {
    if (x < 0 || x >= static_cast<int>(psi.size()) || hit[x])
      throw std::logic_error("duplication map is not a bijection");
    hit[x] = true;
  }
  for (int a = 0; a < prod.order(); ++a)
    for (int b = a + 1; b < prod.order(); ++b)
      if (prod.has_edge(a, b) != dup.has_edge(psi[a], psi[b]))
        throw std::logic_error("duplication map does not preserve edges");
  return psi;
}

}  // namespace mpg
