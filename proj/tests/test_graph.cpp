#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "mpg/graph.hpp"
#include "test_util.hpp"

using mpg::Graph;
using mpg::VertexSet;

TEST_CASE("vertex set matches a reference set implementation") {
  std::mt19937 rng(7001);
  std::uniform_int_distribution<int> pick(0, mpg::max_vertices - 1);
  for (int round = 0; round < 200; ++round) {
    VertexSet s;
    std::set<int> ref;
    for (int i = 0; i < 40; ++i) {
      int v = pick(rng);
      if (i % 3 == 2) {
        s.reset(v);
        ref.erase(v);
      } else {
        s.set(v);
        ref.insert(v);
      }
    }
    REQUIRE(s.count() == static_cast<int>(ref.size()));
    REQUIRE(s.none() == ref.empty());
    REQUIRE(s.first() == (ref.empty() ? -1 : *ref.begin()));
    REQUIRE(s.members() == std::vector<int>(ref.begin(), ref.end()));
    for (int v : ref) {
      REQUIRE(s.test(v));
      auto it = ref.upper_bound(v);
      REQUIRE(s.next(v) == (it == ref.end() ? -1 : *it));
    }
  }
}

TEST_CASE("vertex set boolean operators") {
  std::mt19937 rng(7002);
  std::uniform_int_distribution<int> pick(0, mpg::max_vertices - 1);
  for (int round = 0; round < 100; ++round) {
    VertexSet a, b;
    std::set<int> ra, rb;
    for (int i = 0; i < 30; ++i) {
      int v = pick(rng);
      if (i & 1) {
        a.set(v);
        ra.insert(v);
      } else {
        b.set(v);
        rb.insert(v);
      }
    }
    auto check = [](const VertexSet& s, const std::set<int>& ref) {
      REQUIRE(s.members() == std::vector<int>(ref.begin(), ref.end()));
    };
    std::set<int> ri, ru, rx, rd;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                          std::inserter(ri, ri.end()));
    std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(ru, ru.end()));
    std::set_symmetric_difference(ra.begin(), ra.end(), rb.begin(), rb.end(),
                                  std::inserter(rx, rx.end()));
    std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(rd, rd.end()));
    check(a & b, ri);
    check(a | b, ru);
    check(a ^ b, rx);
    check(a - b, rd);
  }
  REQUIRE(VertexSet::full(0).none());
  REQUIRE(VertexSet::full(64).count() == 64);
  REQUIRE(VertexSet::full(256).count() == 256);
}

TEST_CASE("graph construction and basic queries") {
  Graph g(4);
  REQUIRE(g.order() == 4);
  REQUIRE(g.edge_count() == 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  REQUIRE(g.has_edge(1, 0));
  REQUIRE(g.has_edge(2, 1));
  REQUIRE(!g.has_edge(0, 2));
  REQUIRE(g.degree(1) == 2);
  REQUIRE(g.edge_count() == 2);
  g.remove_edge(0, 1);
  REQUIRE(!g.has_edge(1, 0));

  REQUIRE_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(g.has_edge(-1, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(-1), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(mpg::max_vertices + 1), std::invalid_argument);
  REQUIRE_NOTHROW(Graph(mpg::max_vertices));
}

TEST_CASE("edge list round trip") {
  std::mt19937 rng(7003);
  for (int round = 0; round < 50; ++round) {
    Graph g = testutil::random_graph(rng, 1 + round % 20, 0.3);
    mpg::EdgeList el = mpg::edge_list(g);
    REQUIRE(el.n == g.order());
    REQUIRE(static_cast<int>(el.edges.size()) == g.edge_count());
    REQUIRE(std::is_sorted(el.edges.begin(), el.edges.end()));
    for (auto [u, v] : el.edges) REQUIRE(u < v);
    REQUIRE(mpg::make_graph(el) == g);
  }
}

TEST_CASE("complement is an involution and splits the edge pairs") {
  std::mt19937 rng(7004);
  for (int round = 0; round < 50; ++round) {
    int n = round % 41;
    Graph g = testutil::random_graph(rng, n, 0.4);
    Graph c = mpg::complement(g);
    REQUIRE(mpg::complement(c) == g);
    REQUIRE(g.edge_count() + c.edge_count() == n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) REQUIRE(g.has_edge(u, v) != c.has_edge(u, v));
  }
}

TEST_CASE("vertex deletion relabels order-preservingly") {
  std::mt19937 rng(7005);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + round % 15;
    Graph g = testutil::random_graph(rng, n, 0.4);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int v = pick(rng);
    Graph h = mpg::delete_vertex(g, v);
    REQUIRE(h.order() == n - 1);
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (a == v || b == v) continue;
        REQUIRE(g.has_edge(a, b) == h.has_edge(shift(a), shift(b)));
      }
  }
  REQUIRE_THROWS_AS(mpg::delete_vertex(Graph(3), 3), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  Graph g = testutil::cycle_graph(6);
  Graph h = mpg::induced_subgraph(g, std::vector<int>{0, 1, 2, 4});
  REQUIRE(h.order() == 4);
  REQUIRE(h.has_edge(0, 1));
  REQUIRE(h.has_edge(1, 2));
  REQUIRE(!h.has_edge(2, 3));  // 2~4 not adjacent in C6
  REQUIRE(h.edge_count() == 2);
  REQUIRE_THROWS_AS(mpg::induced_subgraph(g, std::vector<int>{1, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(mpg::induced_subgraph(g, std::vector<int>{0, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(mpg::induced_subgraph(g, std::vector<int>{0, 6}), std::invalid_argument);

  VertexSet s;
  s.set(0);
  s.set(1);
  s.set(2);
  s.set(4);
  REQUIRE(mpg::induced_subgraph(g, s) == h);
}

TEST_CASE("connectivity") {
  REQUIRE(mpg::is_connected(Graph(0)));
  REQUIRE(mpg::is_connected(Graph(1)));
  REQUIRE(!mpg::is_connected(Graph(2)));
  REQUIRE(mpg::is_connected(testutil::cycle_graph(5)));
  REQUIRE(mpg::is_connected(testutil::path_graph(8)));
  Graph two_edges = mpg::make_graph(4, {{0, 1}, {2, 3}});
  REQUIRE(!mpg::is_connected(two_edges));
  // union of components found by brute reachability agrees on random graphs
  std::mt19937 rng(7006);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + round % 12;
    Graph g = testutil::random_graph(rng, n, 0.18);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    for (int s = 0, c = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
          if (g.has_edge(u, v) && comp[v] < 0) {
            comp[v] = c;
            stack.push_back(v);
          }
      }
      ++c;
    }
    bool conn = *std::max_element(comp.begin(), comp.end()) == 0;
    REQUIRE(mpg::is_connected(g) == conn);
  }
}

TEST_CASE("degrees and regularity") {
  Graph c5 = testutil::cycle_graph(5);
  REQUIRE(mpg::degree_sequence(c5) == std::vector<int>{2, 2, 2, 2, 2});
  REQUIRE(mpg::is_regular(c5) == 2);
  REQUIRE(mpg::is_regular(testutil::complete_graph(4)) == 3);
  REQUIRE(!mpg::is_regular(testutil::path_graph(3)).has_value());
  REQUIRE(mpg::is_regular(Graph(0)) == 0);
  REQUIRE(mpg::is_regular(Graph(3)) == 0);
}

TEST_CASE("triangle counts agree with enumeration and the trace formula") {
  REQUIRE(mpg::triangle_count(testutil::complete_graph(4)) == 4);
  REQUIRE(mpg::triangle_count(testutil::complete_graph(6)) == 20);
  REQUIRE(mpg::triangle_count(testutil::cycle_graph(5)) == 0);
  REQUIRE(mpg::triangle_count(testutil::petersen_graph()) == 0);
  std::mt19937 rng(7007);
  for (int round = 0; round < 60; ++round) {
    int n = round % 13;
    Graph g = testutil::random_graph(rng, n, 0.45);
    long long brute = testutil::triangle_count_brute(g);
    REQUIRE(mpg::triangle_count(g) == brute);
    REQUIRE(mpg::triangle_count_trace(g) == brute);
  }
}

TEST_CASE("closed neighborhoods") {
  Graph g = mpg::make_graph(4, {{0, 1}, {0, 2}});
  VertexSet n0 = g.closed_neighborhood(0);
  REQUIRE(n0.members() == std::vector<int>{0, 1, 2});
  REQUIRE(g.neighbors(3).none());
  REQUIRE(g.closed_neighborhood(3).members() == std::vector<int>{3});
}
