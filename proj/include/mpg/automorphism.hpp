#pragma once

#include <set>

#include "mpg/canonical.hpp"
#include "mpg/graph.hpp"
#include "mpg/reseminant.hpp"

namespace mpg {

using Permutation = std::vector<int>;  // vertex i maps to images[i]

inline Permutation compose(const Permutation& a, const Permutation& b) {
  // apply b first, then a
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Permutation inverse(const Permutation& a) {
  Permutation inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<int>(i);
  return inv;
}

inline constexpr int aut_limit = 16;

namespace detail {

// stable equitable colors; every automorphism preserves each color class
inline std::vector<int> invariant_colors(const Graph& g) {
  Partition p(1);
  for (int v = 0; v < g.order(); ++v) p[0].push_back(v);
  refine_partition(g, p);
  std::vector<int> color(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int v : p[i]) color[v] = static_cast<int>(i);
  return color;
}

inline void aut_search(const Graph& g, const std::vector<int>& color, Permutation& image,
                       VertexSet used, int i, std::vector<Permutation>& out) {
  const int n = g.order();
  if (i == n) {
    out.push_back(image);
    return;
  }
  for (int x = 0; x < n; ++x) {
    if (used.test(x) || color[x] != color[i]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      if (g.has_edge(j, i) != g.has_edge(image[j], x)) ok = false;
    if (!ok) continue;
    image[i] = x;
    used.set(x);
    aut_search(g, color, image, used, i + 1, out);
    used.reset(x);
  }
}

}  // namespace detail

// every adjacency-preserving bijection, in lexicographic image order
inline std::vector<Permutation> aut_group(const Graph& g) {
  const int n = g.order();
  if (n > aut_limit) throw std::length_error("aut_group limited to 16 vertices");
  std::vector<Permutation> out;
  Permutation image(static_cast<std::size_t>(n), -1);
  detail::aut_search(g, detail::invariant_colors(g), image, VertexSet{}, 0, out);
  return out;
}

// subgroup stabilizing every twin class setwise; checked normal in auts
inline std::vector<Permutation> twin_kernel(const Graph& g, const std::vector<Permutation>& auts) {
  TwinPartition tp = twin_partition(g);
  std::vector<int> cls(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < tp.classes.size(); ++i)
    for (int v : tp.classes[i]) cls[v] = static_cast<int>(i);
  std::vector<Permutation> kernel;
  std::set<Permutation> kernel_set;
  for (const auto& a : auts) {
    bool trivial = true;
    for (int v = 0; v < g.order() && trivial; ++v)
      if (cls[a[v]] != cls[v]) trivial = false;
    if (trivial) {
      kernel.push_back(a);
      kernel_set.insert(a);
    }
  }
  for (const auto& a : auts)
    for (const auto& h : kernel)
      if (!kernel_set.count(compose(compose(a, h), inverse(a))))
        throw std::logic_error("twin kernel is not normal");
  return kernel;
}

struct AutReport {
  unsigned long long order = 0;
  unsigned long long kernel_order = 0;
  unsigned long long quotient_order = 0;
  bool kernel_matches_twin_product = false;
  bool quotient_embeds_in_base_aut = false;
};

inline AutReport decompose_aut(const Graph& g) {
  AutReport r;
  std::vector<Permutation> auts = aut_group(g);
  TwinPartition tp = twin_partition(g);
  std::vector<int> cls(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < tp.classes.size(); ++i)
    for (int v : tp.classes[i]) cls[v] = static_cast<int>(i);
  std::vector<Permutation> kernel = twin_kernel(g, auts);
  r.order = auts.size();
  r.kernel_order = kernel.size();
  r.quotient_order = r.order / r.kernel_order;

  unsigned long long product = 1;
  for (int h : tp.sizes)
    for (int i = 2; i <= h; ++i) product *= static_cast<unsigned long long>(i);
  r.kernel_matches_twin_product = r.kernel_order == product;

  // induced permutations of twin classes, realized on base-graph vertices
  Graph base = base_graph(g);
  std::set<Permutation> induced;
  bool embeds = true;
  for (const auto& a : auts) {
    Permutation sigma(tp.classes.size());
    for (std::size_t ci = 0; ci < tp.classes.size(); ++ci) {
      int target = cls[a[tp.classes[ci][0]]];
      for (int v : tp.classes[ci])
        if (cls[a[v]] != target) throw std::logic_error("automorphism split a twin class");
      sigma[ci] = target;
    }
    induced.insert(sigma);
  }
  for (const auto& sigma : induced)
    for (int i = 0; i < base.order() && embeds; ++i)
      for (int j = i + 1; j < base.order(); ++j)
        if (base.has_edge(i, j) != base.has_edge(sigma[i], sigma[j])) {
          embeds = false;
          break;
        }
  r.quotient_embeds_in_base_aut = embeds && induced.size() == r.quotient_order;
  return r;
}

enum class ReseminantAutClass { d5_quotient, z2_quotient, kernel_only };

inline const char* to_string(ReseminantAutClass c) {
  switch (c) {
    case ReseminantAutClass::d5_quotient:
      return "D5-quotient";
    case ReseminantAutClass::z2_quotient:
      return "Z2-quotient";
    case ReseminantAutClass::kernel_only:
      return "kernel-only";
  }
  return "?";
}

// constant w keeps the whole dihedral action; otherwise only an index-cycle
// reflection can survive (order-5 rotations fix no non-constant w)
inline ReseminantAutClass classify_c5_reseminant_aut(const DuplicationVector& d) {
  if (d.base_n != 5) throw std::invalid_argument("classification needs the C5 model");
  const auto& w = d.w;
  if (std::all_of(w.begin(), w.end(), [&](int x) { return x == w[0]; }))
    return ReseminantAutClass::d5_quotient;
  for (int j = 0; j < 5; ++j) {
    bool fixed = true;
    for (int i = 0; i < 5; ++i)
      if (w[((j - i) % 5 + 5) % 5] != w[i]) {
        fixed = false;
        break;
      }
    if (fixed) return ReseminantAutClass::z2_quotient;
  }
  return ReseminantAutClass::kernel_only;
}

}  // namespace mpg
