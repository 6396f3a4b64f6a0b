#pragma once

#include <string>

#include "mpg/coloring.hpp"
#include "mpg/graph.hpp"
#include "mpg/verify.hpp"

namespace mpg {

// new vertex n adjacent to exactly u
inline Graph attach_vertex(const Graph& g, const VertexSet& u) {
  const int n = g.order();
  if (n + 1 > max_vertices) throw std::length_error("attach exceeds vertex cap");
  if (!(u - VertexSet::full(n)).none()) throw std::invalid_argument("site vertex out of range");
  Graph h(n + 1);
  for (auto [a, b] : edge_list(g).edges) h.add_edge(a, b);
  for (int v = u.first(); v >= 0; v = u.next(v)) h.add_edge(n, v);
  return h;
}

inline Graph attach_vertex(const Graph& g, const std::vector<int>& u) {
  VertexSet s;
  for (int v : u) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("site vertex out of range");
    s.set(v);
  }
  return attach_vertex(g, s);
}

namespace detail {

inline bool is_site_unchecked(const Graph& g, const VertexSet& u) {
  return check_minimal_prime_graph(attach_vertex(g, u)).is_minimal;
}

inline void require_minimal(const Graph& g, const char* who) {
  if (!check_minimal_prime_graph(g).is_minimal)
    throw std::invalid_argument(std::string(who) + " requires a minimal prime graph");
}

// every clique of g, the empty set included, by ordered extension
inline void all_cliques_rec(const Graph& g, VertexSet cand, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    cand.reset(v);
    cur.push_back(v);
    all_cliques_rec(g, cand & g.neighbors(v), cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<int>> all_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::all_cliques_rec(g, VertexSet::full(g.order()), cur, out);
  return out;
}

inline bool is_clique(const Graph& g, const std::vector<int>& k) {
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (!g.has_edge(k[i], k[j])) return false;
  return true;
}

inline bool is_maximal_clique(const Graph& g, const std::vector<int>& k) {
  if (!is_clique(g, k)) return false;
  VertexSet in;
  for (int v : k) in.set(v);
  for (int x = 0; x < g.order(); ++x) {
    if (in.test(x)) continue;
    VertexSet missed = in - g.neighbors(x);
    if (missed.none()) return false;
  }
  return true;
}

inline bool is_generation_site(const Graph& g, const std::vector<int>& u) {
  detail::require_minimal(g, "is_generation_site");
  VertexSet s;
  for (int v : u) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("site vertex out of range");
    s.set(v);
  }
  return detail::is_site_unchecked(g, s);
}

struct GenerationSite {
  std::vector<int> site;            // U
  std::vector<int> complement_set;  // K = V minus U, a clique
  Graph generated;
};

// K = V\U must be a clique, so candidates range over cliques rather than subsets
inline std::vector<GenerationSite> enumerate_generation_sites(const Graph& g) {
  if (g.order() > 20) throw std::length_error("site enumeration bounded at 20 vertices");
  detail::require_minimal(g, "enumerate_generation_sites");
  std::vector<GenerationSite> out;
  VertexSet all = VertexSet::full(g.order());
  for (const auto& k : all_cliques(g)) {
    VertexSet ks;
    for (int v : k) ks.set(v);
    VertexSet u = all - ks;
    if (!detail::is_site_unchecked(g, u)) continue;
    GenerationSite s;
    s.site = u.members();
    s.complement_set = k;
    s.generated = attach_vertex(g, u);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const GenerationSite& a, const GenerationSite& b) { return a.site < b.site; });
  return out;
}

struct SiteConditions {
  bool two_colorable_complement_k = false;  // some 3-coloring of the complement 2-colors K
  bool k_is_clique = false;
};

// exact: for each palette color c, search for a proper 3-coloring of the
// complement in which no vertex of K receives c
inline SiteConditions site_conditions(const Graph& g, const std::vector<int>& u) {
  VertexSet us;
  for (int v : u) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("site vertex out of range");
    us.set(v);
  }
  VertexSet k = VertexSet::full(g.order()) - us;
  SiteConditions cond;
  cond.k_is_clique = is_clique(g, k.members());
  Graph comp = complement(g);
  for (int c = 0; c < 3 && !cond.two_colorable_complement_k; ++c) {
    std::vector<std::uint8_t> allowed(static_cast<std::size_t>(g.order()), 7);
    for (int v = k.first(); v >= 0; v = k.next(v))
      allowed[v] = static_cast<std::uint8_t>(7 & ~(1u << c));
    if (find_3_coloring_masked(comp, allowed)) cond.two_colorable_complement_k = true;
  }
  return cond;
}

// attach at V\K for a maximal clique K with a qualifying coloring
inline Graph clique_generate(const Graph& g, const std::vector<int>& k) {
  detail::require_minimal(g, "clique_generate");
  if (!is_maximal_clique(g, k)) throw std::invalid_argument("clique_generate needs a maximal clique");
  VertexSet ks;
  for (int v : k) ks.set(v);
  std::vector<int> u = (VertexSet::full(g.order()) - ks).members();
  if (!site_conditions(g, u).two_colorable_complement_k)
    throw std::invalid_argument("no 3-coloring of the complement 2-colors the clique");
  Graph out = attach_vertex(g, u);
  if (!check_minimal_prime_graph(out).is_minimal)
    throw std::logic_error("clique generation produced a non-minimal graph");
  return out;
}

enum class SiteKind { vd, cg, both, other };

inline const char* to_string(SiteKind k) {
  switch (k) {
    case SiteKind::vd:
      return "VD";
    case SiteKind::cg:
      return "CG";
    case SiteKind::both:
      return "both";
    case SiteKind::other:
      return "other";
  }
  return "?";
}

struct SiteClassification {
  bool is_vertex_duplication = false;  // U = N[v] for some v
  bool is_clique_generation = false;   // K maximal clique with qualifying coloring
  SiteKind kind = SiteKind::other;
};

inline SiteClassification classify_site(const Graph& g, const std::vector<int>& u) {
  if (!is_generation_site(g, u)) throw std::invalid_argument("not a generation site");
  VertexSet us;
  for (int v : u) us.set(v);
  SiteClassification c;
  for (int v = 0; v < g.order() && !c.is_vertex_duplication; ++v)
    if (g.closed_neighborhood(v) == us) c.is_vertex_duplication = true;
  std::vector<int> k = (VertexSet::full(g.order()) - us).members();
  c.is_clique_generation =
      is_maximal_clique(g, k) && site_conditions(g, u).two_colorable_complement_k;
  if (c.is_vertex_duplication && c.is_clique_generation)
    c.kind = SiteKind::both;
  else if (c.is_vertex_duplication)
    c.kind = SiteKind::vd;
  else if (c.is_clique_generation)
    c.kind = SiteKind::cg;
  else
    c.kind = SiteKind::other;
  return c;
}

}  // namespace mpg
