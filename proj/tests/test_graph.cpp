#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "maglap/generate.hpp"
#include "maglap/graph.hpp"
#include "maglap/matching.hpp"
#include "test_support.hpp"

using namespace maglap;
using namespace maglap::test;

TEST_CASE("from_edge_list canonicalizes and validates") {
  Graph g = Graph::from_edge_list(2, {{0, 1}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);

  Graph g1 = nonmatchable6();
  CHECK(g1.edge_count() == 6);
  std::vector<int> degrees;
  for (int v = 0; v < 6; ++v) degrees.push_back(g1.degree(v));
  CHECK(degrees == std::vector<int>{1, 2, 2, 2, 4, 1});

  // pair order defines the reference orientation after canonicalization
  Graph flipped = Graph::from_edge_list(3, {{2, 0}});
  CHECK(flipped.edge(0).u == 0);
  CHECK(flipped.edge(0).v == 2);

  CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{0, 1}, {0, 1}}), doctest::Contains("duplicate"),
                       Error);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 0}, {0, 1}}), Error); // same edge, flipped
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), Error);
}

TEST_CASE("error codes are machine checkable") {
  try {
    Graph::from_edge_list(3, {{1, 1}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::LoopEdge);
  }
  try {
    nonmatchable6().delete_edge(17);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::BadEdgeId);
  }
}

TEST_CASE("is_connected") {
  CHECK(k2().is_connected());
  CHECK(nonmatchable6().is_connected());
  Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(two_k2.is_connected());
}

TEST_CASE("delete_edge keeps vertex set and edge order") {
  Graph gone = k2().delete_edge(0);
  CHECK(gone.vertex_count() == 2);
  CHECK(gone.edge_count() == 0);

  // removing the one cycle edge of nonmatchable6 leaves a tree
  Graph g1 = nonmatchable6();
  EdgeId e24 = *g1.find_edge(2, 4);
  Graph tree = g1.delete_edge(e24);
  CHECK(tree.edge_count() == 5);
  CHECK(tree.is_connected());
  CHECK(is_forest(tree));

  // remaining edges preserve their original order
  Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph d = g.delete_edge(1);
  CHECK(d.edge(0) == Edge{0, 1});
  CHECK(d.edge(1) == Edge{2, 3});
}

TEST_CASE("deleting the non-matching edges of a tree leaves K2s and isolated vertices") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph t = random_tree(2 + static_cast<int>(rng() % 12), rng);
    Matching m = maximum_matching(t);
    std::set<EdgeId> keep(m.edges.begin(), m.edges.end());
    std::vector<EdgeId> drop;
    for (EdgeId e = 0; e < t.edge_count(); ++e)
      if (!keep.count(e)) drop.push_back(e);
    Graph rest = t.delete_edges(drop);
    CHECK(rest.edge_count() == m.size());
    for (int v = 0; v < rest.vertex_count(); ++v) CHECK(rest.degree(v) <= 1);
  }
}

TEST_CASE("spanning_tree structure") {
  Graph g1 = nonmatchable6();
  SpanningTreeDecomposition d = spanning_tree(g1);
  CHECK(d.tree_edges().size() == 5);
  CHECK(d.chords().size() == 1); // m - n + 1 = 6 - 6 + 1

  Graph g2 = nonhamiltonian6();
  CHECK(spanning_tree(g2).chords().size() == 3); // 8 - 6 + 1

  Graph path = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(spanning_tree(path).chords().empty());

  Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(spanning_tree(two_k2), Error);
}

TEST_CASE("spanning tree output is a spanning tree") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 10);
    Graph g = random_connected_graph(n, n - 1 + static_cast<int>(rng() % 6), rng);
    SpanningTreeDecomposition d = spanning_tree(g);
    CHECK(static_cast<int>(d.tree_edges().size()) == n - 1);
    CHECK(static_cast<int>(d.chords().size()) == g.edge_count() - n + 1);
    Graph t = g.delete_edges(d.chords());
    CHECK(t.is_connected());
    CHECK(is_forest(t));
  }
}

TEST_CASE("spanning_tree_containing_matching") {
  Graph g = k2();
  SpanningTreeDecomposition d = spanning_tree_containing_matching(g, {0});
  CHECK(d.tree_edges() == std::vector<EdgeId>{0});

  // two opposite edges of C4 end up in a path
  Graph c = c4();
  EdgeId a = *c.find_edge(0, 1), b = *c.find_edge(2, 3);
  SpanningTreeDecomposition dp = spanning_tree_containing_matching(c, {a, b});
  CHECK(dp.is_tree_edge(a));
  CHECK(dp.is_tree_edge(b));
  CHECK(dp.tree_edges().size() == 3);

  // maximum matchings of nonhamiltonian6 extend to trees with equal mu
  Graph g2 = nonhamiltonian6();
  Matching m = maximum_matching(g2);
  CHECK(m.size() == 3);
  SpanningTreeDecomposition dm = spanning_tree_containing_matching(g2, m.edges);
  Graph tree = g2.delete_edges(dm.chords());
  CHECK(matching_number(tree) == 3);

  CHECK_THROWS_AS(spanning_tree_containing_matching(c, {0, 1}), Error); // share a vertex
}

TEST_CASE("fundamental cycles") {
  Graph g1 = nonmatchable6();
  SpanningTreeDecomposition d = spanning_tree(g1);
  const ArcPath& cyc = d.fundamental_cycle(d.chords()[0]);
  CHECK(cyc.size() == 4);
  CHECK(is_closed_walk(g1, cyc));
  std::set<int> verts;
  for (const Arc& a : cyc) {
    verts.insert(arc_tail(g1, a));
    verts.insert(arc_head(g1, a));
  }
  CHECK(verts == std::set<int>{1, 2, 3, 4});

  Graph c6 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  SpanningTreeDecomposition dc = spanning_tree(c6);
  REQUIRE(dc.chords().size() == 1);
  CHECK(dc.fundamental_cycle(dc.chords()[0]).size() == 6);

  Graph tri = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  SpanningTreeDecomposition dt = spanning_tree(tri);
  CHECK(dt.fundamental_cycle(dt.chords()[0]).size() == 3);

  CHECK_THROWS_AS(d.fundamental_cycle(d.tree_edges()[0]), Error);
}

TEST_CASE("fundamental cycle contains its chord once and tree edges otherwise") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 9);
    Graph g = random_connected_graph(n, n + static_cast<int>(rng() % 4), rng);
    SpanningTreeDecomposition d = spanning_tree(g);
    for (EdgeId c : d.chords()) {
      const ArcPath& cyc = d.fundamental_cycle(c);
      CHECK(is_closed_walk(g, cyc));
      int chord_uses = 0;
      for (const Arc& a : cyc) {
        if (a.edge == c)
          ++chord_uses;
        else
          CHECK(d.is_tree_edge(a.edge));
      }
      CHECK(chord_uses == 1);
      CHECK(cyc.front().edge == c);
      CHECK(cyc.front().forward);
    }
  }
}

TEST_CASE("handshake: degree sum is twice the edge count") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    int m = n < 2 ? 0 : static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    Graph g = n < 2 ? Graph::from_edge_list(1, {}) : random_connected_graph(n, m, rng);
    int sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}
