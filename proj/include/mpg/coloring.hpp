#pragma once

#include <cstdint>
#include <numeric>

#include "mpg/graph.hpp"

namespace mpg {

struct Coloring {
  std::vector<int> colors;  // one per vertex
  int palette = 0;          // every color index < palette
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (c.colors[v] < 0 || c.colors[v] >= c.palette) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
      if (c.colors[u] == c.colors[v]) return false;
  return true;
}

namespace detail {

// vertices in search order: degree descending, index ascending
inline std::vector<int> coloring_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

// backtracking with forward checking over 3-bit allowed masks
inline bool three_color_search(const Graph& g, const std::vector<int>& order, std::size_t i,
                               std::vector<std::uint8_t>& allowed, std::vector<int>& colors) {
  if (i == order.size()) return true;
  const int v = order[i];
  for (int c = 0; c < 3; ++c) {
    if (!(allowed[v] & (1u << c))) continue;
    colors[v] = c;
    std::vector<int> touched;
    bool dead = false;
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
      if (colors[u] >= 0 || !(allowed[u] & (1u << c))) continue;
      allowed[u] = static_cast<std::uint8_t>(allowed[u] & ~(1u << c));
      touched.push_back(u);
      if (allowed[u] == 0) {
        dead = true;
        break;
      }
    }
    if (!dead && three_color_search(g, order, i + 1, allowed, colors)) return true;
    for (int u : touched) allowed[u] = static_cast<std::uint8_t>(allowed[u] | (1u << c));
    colors[v] = -1;
  }
  return false;
}

inline std::optional<Coloring> run_three_color(const Graph& g, std::vector<std::uint8_t> allowed,
                                               bool break_symmetry) {
  const int n = g.order();
  std::vector<int> order = coloring_order(g);
  if (break_symmetry) {
    // pin the first processed edge to colors 0, 1
    for (int u : order) {
      if (g.degree(u) == 0) continue;
      int v = -1;
      for (int cand : order) {
        if (g.has_edge(u, cand)) {
          v = cand;
          break;
        }
      }
      allowed[u] &= 1u;  // color 0
      allowed[v] &= 2u;  // color 1
      break;
    }
  }
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  if (!three_color_search(g, order, 0, allowed, colors)) return std::nullopt;
  Coloring c;
  c.colors = colors;
  c.palette = 0;
  for (int x : colors) c.palette = std::max(c.palette, x + 1);
  return c;
}

}  // namespace detail

inline std::optional<Coloring> find_3_coloring(const Graph& g) {
  std::vector<std::uint8_t> allowed(static_cast<std::size_t>(g.order()), 7);
  return detail::run_three_color(g, std::move(allowed), true);
}

// per-vertex allowed-color masks (bit c = color c usable); no symmetry breaking
inline std::optional<Coloring> find_3_coloring_masked(const Graph& g,
                                                      std::vector<std::uint8_t> allowed) {
  if (static_cast<int>(allowed.size()) != g.order())
    throw std::invalid_argument("mask size mismatch");
  return detail::run_three_color(g, std::move(allowed), false);
}

namespace detail {

// greedy clique around each seed vertex
inline std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> order = coloring_order(g);
  std::vector<int> best;
  for (int seed : order) {
    std::vector<int> clique{seed};
    VertexSet cand = g.neighbors(seed);
    for (int v : order) {
      if (!cand.test(v)) continue;
      clique.push_back(v);
      cand = cand & g.neighbors(v);
    }
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

inline void max_clique_rec(const Graph& g, VertexSet cand, std::vector<int>& cur,
                           std::vector<int>& best) {
  if (static_cast<int>(cur.size()) > static_cast<int>(best.size())) best = cur;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    if (static_cast<int>(cur.size()) + cand.count() <= static_cast<int>(best.size())) return;
    cand.reset(v);
    cur.push_back(v);
    max_clique_rec(g, cand & g.neighbors(v), cur, best);
    cur.pop_back();
  }
}

inline std::vector<int> max_clique(const Graph& g) {
  std::vector<int> best = greedy_clique(g);
  std::vector<int> cur;
  max_clique_rec(g, VertexSet::full(g.order()), cur, best);
  return best;
}

// DSATUR greedy upper bound
inline int greedy_coloring_bound(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<std::uint64_t> nmask(static_cast<std::size_t>(n), 0);
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1, sat = -1, deg = -1;
    for (int u = 0; u < n; ++u) {
      if (colors[u] >= 0) continue;
      int s = std::popcount(nmask[u]);
      int d = g.degree(u);
      if (s > sat || (s == sat && d > deg)) {
        v = u;
        sat = s;
        deg = d;
      }
    }
    int c = std::countr_one(nmask[v]);
    colors[v] = c;
    used = std::max(used, c + 1);
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (colors[u] < 0 && c < 64) nmask[u] |= std::uint64_t{1} << c;
  }
  return used;
}

// exact k-colorability; clique precolored, new colors introduced in order
inline bool k_color_search(const Graph& g, int k, std::vector<int>& colors,
                           std::vector<std::uint64_t>& nmask, int uncolored, int maxused) {
  if (uncolored == 0) return true;
  const int n = g.order();
  int v = -1, sat = -1, deg = -1;
  for (int u = 0; u < n; ++u) {
    if (colors[u] >= 0) continue;
    int s = std::popcount(nmask[u]);
    int d = g.degree(u);
    if (s > sat || (s == sat && d > deg)) {
      v = u;
      sat = s;
      deg = d;
    }
  }
  const int limit = std::min(k, maxused + 1);
  for (int c = 0; c < limit; ++c) {
    if ((nmask[v] >> c) & 1) continue;
    colors[v] = c;
    std::vector<int> touched;
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
      if (colors[u] >= 0 || ((nmask[u] >> c) & 1)) continue;
      nmask[u] |= std::uint64_t{1} << c;
      touched.push_back(u);
    }
    if (k_color_search(g, k, colors, nmask, uncolored - 1, std::max(maxused, c + 1))) return true;
    for (int u : touched) nmask[u] &= ~(std::uint64_t{1} << c);
    colors[v] = -1;
  }
  return false;
}

inline bool k_colorable(const Graph& g, int k, const std::vector<int>& clique) {
  const int n = g.order();
  if (static_cast<int>(clique.size()) > k) return false;
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> nmask(static_cast<std::size_t>(n), 0);
  int next = 0;
  for (int v : clique) {
    colors[v] = next;
    for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
      if (colors[u] < 0) nmask[u] |= std::uint64_t{1} << next;
    ++next;
  }
  return k_color_search(g, k, colors, nmask, n - next, next);
}

}  // namespace detail

inline constexpr int chromatic_limit = 32;

// exact chi: iterative deepening between clique / independent-set bounds and a greedy bound
inline int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n > chromatic_limit) throw std::length_error("chromatic_number limited to 32 vertices");
  if (n == 0) return 0;
  std::vector<int> clique = detail::max_clique(g);
  int lb = static_cast<int>(clique.size());
  int alpha = static_cast<int>(detail::max_clique(complement(g)).size());
  lb = std::max(lb, (n + alpha - 1) / alpha);
  int ub = detail::greedy_coloring_bound(g);
  for (int k = lb; k < ub; ++k)
    if (detail::k_colorable(g, k, clique)) return k;
  return ub;
}

}  // namespace mpg
