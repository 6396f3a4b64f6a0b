#include <catch2/catch_amalgamated.hpp>

#include "mpg/catalog.hpp"
#include "mpg/verify.hpp"
#include "test_util.hpp"

using mpg::Graph;

namespace {

// prism = complement of the 6-cycle
Graph prism() { return mpg::complement(testutil::cycle_graph(6)); }

// Mycielski construction over C5: triangle-free with chromatic number 4
Graph groetzsch() {
  Graph g(11);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 4) % 5);
    g.add_edge(5 + i, 10);
  }
  return g;
}

bool brute_minimal(const Graph& g) {
  if (g.order() < 2 || !mpg::is_connected(g)) return false;
  Graph comp = mpg::complement(g);
  if (testutil::triangle_count_brute(comp) > 0 || !testutil::three_colorable_brute(comp))
    return false;
  for (auto [u, v] : mpg::edge_list(g).edges) {
    Graph h = comp;
    h.add_edge(u, v);
    if (testutil::triangle_count_brute(h) == 0 && testutil::three_colorable_brute(h)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("triangle finding") {
  REQUIRE(!mpg::find_triangle(testutil::cycle_graph(5)).has_value());
  auto t = mpg::find_triangle(testutil::complete_graph(4));
  REQUIRE(t.has_value());
  REQUIRE(*t == std::array<int, 3>{0, 1, 2});
  REQUIRE(mpg::is_triangle_free(testutil::petersen_graph()));
  REQUIRE(!mpg::is_triangle_free(prism()));
}

TEST_CASE("solvable prime graph predicate") {
  REQUIRE(mpg::is_solvable_prime_graph(testutil::cycle_graph(5)));
  REQUIRE(mpg::is_solvable_prime_graph(testutil::complete_graph(4)));  // empty complement
  REQUIRE(!mpg::is_solvable_prime_graph(testutil::cycle_graph(6)));    // complement has triangles
  REQUIRE(mpg::is_solvable_prime_graph(prism()));
  REQUIRE(!mpg::is_solvable_prime_graph(mpg::complement(groetzsch())));  // complement not 3-colorable
}

TEST_CASE("all builtin fixtures are minimal") {
  for (const auto& e : mpg::builtin_fixtures()) {
    INFO(e.name);
    mpg::MinimalityReport r = mpg::check_minimal_prime_graph(e.graph);
    REQUIRE(r.is_solvable);
    REQUIRE(r.is_minimal);
    REQUIRE(!r.failing_edge.has_value());
  }
}

TEST_CASE("deleting one marked edge of the 8-vertex fixture leaves a complement triangle") {
  Graph g = mpg::find_fixture("FIG1_8")->graph;
  g.remove_edge(1, 7);
  mpg::MinimalityReport r = mpg::check_minimal_prime_graph(g);
  REQUIRE(!r.is_solvable);
  REQUIRE(r.triangle_witness.has_value());
  auto t = *r.triangle_witness;
  std::sort(t.begin(), t.end());
  REQUIRE(t == std::array<int, 3>{1, 4, 7});
  Graph comp = mpg::complement(g);
  REQUIRE(comp.has_edge(t[0], t[1]));
  REQUIRE(comp.has_edge(t[1], t[2]));
  REQUIRE(comp.has_edge(t[0], t[2]));
}

TEST_CASE("the prism is solvable but not minimal, with the long chord as witness") {
  mpg::MinimalityReport r = mpg::check_minimal_prime_graph(prism());
  REQUIRE(r.is_solvable);
  REQUIRE(!r.is_minimal);
  REQUIRE(r.failing_edge == std::pair<int, int>{0, 3});
  REQUIRE(r.failure_kind == mpg::FailureKind::coloring_survives);
  REQUIRE(r.coloring_witness.has_value());
  Graph h = mpg::complement(prism());
  h.add_edge(0, 3);
  REQUIRE(mpg::is_triangle_free(h));
  REQUIRE(mpg::is_proper_coloring(h, *r.coloring_witness));
  REQUIRE(r.coloring_witness->palette <= 3);
}

TEST_CASE("small and disconnected cases are never minimal") {
  mpg::MinimalityReport one = mpg::check_minimal_prime_graph(Graph(1));
  REQUIRE(one.is_solvable);
  REQUIRE(!one.is_minimal);
  REQUIRE(!one.failing_edge.has_value());

  Graph two_edges = mpg::make_graph(4, {{0, 1}, {2, 3}});
  mpg::MinimalityReport d = mpg::check_minimal_prime_graph(two_edges);
  REQUIRE(d.is_solvable);
  REQUIRE(!d.is_minimal);
  REQUIRE(!d.failing_edge.has_value());

  mpg::MinimalityReport k2 = mpg::check_minimal_prime_graph(testutil::complete_graph(2));
  REQUIRE(k2.is_solvable);
  REQUIRE(!k2.is_minimal);
  REQUIRE(k2.failing_edge == std::pair<int, int>{0, 1});
}

TEST_CASE("the 5-cycle is minimal") {
  mpg::MinimalityReport r = mpg::check_minimal_prime_graph(testutil::cycle_graph(5));
  REQUIRE(r.is_minimal);
}

TEST_CASE("minimality agrees with brute force on random graphs") {
  std::mt19937 rng(7301);
  std::uniform_real_distribution<double> pd(0.3, 0.9);
  int minimal_seen = 0;
  for (int round = 0; round < 400; ++round) {
    Graph g = testutil::random_graph(rng, 2 + round % 7, pd(rng));
    if (round % 50 == 0) {
      // salt the corpus with relabeled known-minimal graphs so the positive branch runs too
      Graph seed = round % 100 == 0 ? testutil::cycle_graph(5) : mpg::find_fixture("FIG2_6")->graph;
      g = testutil::relabel(seed, testutil::random_permutation(rng, seed.order()));
    }
    bool brute = brute_minimal(g);
    minimal_seen += brute ? 1 : 0;
    REQUIRE(mpg::check_minimal_prime_graph(g).is_minimal == brute);
  }
  REQUIRE(minimal_seen > 0);  // the corpus exercises the positive branch
}

TEST_CASE("failing edges are genuine witnesses") {
  std::mt19937 rng(7302);
  std::uniform_real_distribution<double> pd(0.4, 0.9);
  for (int round = 0; round < 200; ++round) {
    Graph g = testutil::random_graph(rng, 4 + round % 5, pd(rng));
    mpg::MinimalityReport r = mpg::check_minimal_prime_graph(g);
    if (!r.failing_edge) continue;
    auto [u, v] = *r.failing_edge;
    REQUIRE(g.has_edge(u, v));
    Graph h = mpg::complement(g);
    h.add_edge(u, v);
    REQUIRE(mpg::is_triangle_free(h));
    REQUIRE(r.coloring_witness.has_value());
    REQUIRE(mpg::is_proper_coloring(h, *r.coloring_witness));
  }
}

TEST_CASE("addable edges on a path") {
  Graph p4 = testutil::path_graph(4);
  auto add = mpg::addable_edges(p4);
  REQUIRE(add == std::vector<std::pair<int, int>>{{0, 3}});
}

TEST_CASE("addable edges match brute force") {
  std::mt19937 rng(7303);
  int checked = 0;
  for (int round = 0; round < 400 && checked < 120; ++round) {
    Graph h = testutil::random_graph(rng, 3 + round % 5, 0.25);
    if (testutil::triangle_count_brute(h) > 0 || !testutil::three_colorable_brute(h)) continue;
    ++checked;
    std::vector<std::pair<int, int>> brute;
    for (int u = 0; u < h.order(); ++u)
      for (int v = u + 1; v < h.order(); ++v) {
        if (h.has_edge(u, v)) continue;
        Graph x = h;
        x.add_edge(u, v);
        if (testutil::triangle_count_brute(x) == 0 && testutil::three_colorable_brute(x))
          brute.emplace_back(u, v);
      }
    REQUIRE(mpg::addable_edges(h) == brute);
  }
  REQUIRE(checked >= 120);
}

TEST_CASE("addable edges validates its precondition") {
  REQUIRE_THROWS_AS(mpg::addable_edges(testutil::complete_graph(4)), std::invalid_argument);
  REQUIRE_THROWS_AS(mpg::addable_edges(groetzsch()), std::invalid_argument);
  // a minimal graph's complement has nothing addable
  REQUIRE(mpg::addable_edges(mpg::complement(testutil::cycle_graph(5))).empty());
}
