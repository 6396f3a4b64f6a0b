#pragma once

#include <cstdint>

#include "mpg/graph.hpp"

namespace mpg {

inline constexpr int canonical_limit = 64;

struct CanonicalForm {
  // 2-byte order then packed upper-triangle bits of the relabeled graph;
  // equal certs <=> isomorphic (within the size limit)
  std::vector<std::uint8_t> cert;
  // perm[old] = new label achieving cert
  std::vector<int> perm;
};

namespace detail {

using Partition = std::vector<std::vector<int>>;  // ordered cells, members ascending

// equitable refinement: split every cell by its members' neighbor counts
// against all cells; group order follows signature order, so the result
// depends only on the isomorphism type and the incoming cell order
inline void refine_partition(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<VertexSet> mask(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int v : p[i]) mask[i].set(v);
    for (std::size_t ci = 0; ci < p.size(); ++ci) {
      if (p[ci].size() <= 1) continue;
      std::vector<std::pair<std::vector<int>, int>> sig;
      sig.reserve(p[ci].size());
      for (int v : p[ci]) {
        std::vector<int> counts(p.size());
        for (std::size_t cj = 0; cj < p.size(); ++cj)
          counts[cj] = (g.neighbors(v) & mask[cj]).count();
        sig.emplace_back(std::move(counts), v);
      }
      std::stable_sort(sig.begin(), sig.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      bool split = false;
      for (std::size_t i = 1; i < sig.size(); ++i)
        if (sig[i].first != sig[0].first) {
          split = true;
          break;
        }
      if (!split) continue;
      Partition groups;
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) groups.emplace_back();
        groups.back().push_back(sig[i].second);
      }
      for (auto& cell : groups) std::sort(cell.begin(), cell.end());
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(ci));
      p.insert(p.begin() + static_cast<std::ptrdiff_t>(ci), groups.begin(), groups.end());
      changed = true;
      break;
    }
  }
}

// pairwise twins: identical rows outside the cell, complete or empty inside;
// swapping any two members is then an automorphism, so one branch suffices
inline bool is_twin_cell(const Graph& g, const std::vector<int>& cell) {
  VertexSet inside;
  for (int v : cell) inside.set(v);
  const int sz = static_cast<int>(cell.size());
  VertexSet out0 = g.neighbors(cell[0]) - inside;
  int in0 = (g.neighbors(cell[0]) & inside).count();
  if (in0 != 0 && in0 != sz - 1) return false;
  for (std::size_t i = 1; i < cell.size(); ++i) {
    if (!((g.neighbors(cell[i]) - inside) == out0)) return false;
    if ((g.neighbors(cell[i]) & inside).count() != in0) return false;
  }
  return true;
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint8_t> best;
  std::vector<int> best_perm;
  bool have = false;

  std::vector<std::uint8_t> pack(const std::vector<int>& perm) const {
    const int n = g.order();
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    std::vector<std::uint8_t> bits;
    int acc = 0, nbits = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        acc = (acc << 1) | (g.has_edge(inv[i], inv[j]) ? 1 : 0);
        if (++nbits == 8) {
          bits.push_back(static_cast<std::uint8_t>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    if (nbits > 0) bits.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return bits;
  }

  void leaf(const Partition& p) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < p.size(); ++i) perm[p[i][0]] = static_cast<int>(i);
    auto bits = pack(perm);
    if (!have || bits < best) {
      best = std::move(bits);
      best_perm = std::move(perm);
      have = true;
    }
  }

  void search(Partition p) {
    refine_partition(g, p);
    std::size_t ci = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i].size() > 1) {
        ci = i;
        break;
      }
    if (ci == p.size()) {
      leaf(p);
      return;
    }
    std::vector<int> branches = is_twin_cell(g, p[ci]) ? std::vector<int>{p[ci][0]} : p[ci];
    for (int v : branches) {
      Partition q;
      q.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != ci) {
          q.push_back(p[i]);
          continue;
        }
        q.push_back({v});
        std::vector<int> rest;
        for (int u : p[ci])
          if (u != v) rest.push_back(u);
        q.push_back(std::move(rest));
      }
      search(std::move(q));
    }
  }
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > canonical_limit) throw std::length_error("canonical_form limited to 64 vertices");
  CanonicalForm out;
  out.cert.push_back(static_cast<std::uint8_t>(n >> 8));
  out.cert.push_back(static_cast<std::uint8_t>(n & 255));
  if (n == 0) return out;
  detail::CanonSearch s{g, {}, {}};
  detail::Partition start(1);
  for (int v = 0; v < n; ++v) start[0].push_back(v);
  s.search(std::move(start));
  out.cert.insert(out.cert.end(), s.best.begin(), s.best.end());
  out.perm = s.best_perm;
  return out;
}

// mapping a -> b when isomorphic
inline std::optional<std::vector<int>> is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return std::nullopt;
  CanonicalForm ca = canonical_form(a);
  CanonicalForm cb = canonical_form(b);
  if (ca.cert != cb.cert) return std::nullopt;
  const int n = a.order();
  std::vector<int> inv_b(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) inv_b[cb.perm[v]] = v;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sigma[v] = inv_b[ca.perm[v]];
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a.has_edge(u, v) != b.has_edge(sigma[u], sigma[v]))
        throw std::logic_error("canonical certs collided on non-isomorphic graphs");
  return sigma;
}

}  // namespace mpg
