#include <random>

#include "amm/charpoly.hpp"
#include "amm/errors.hpp"
#include "amm/graph.hpp"
#include "amm/tree_enum.hpp"
#include "doctest.h"

using namespace amm;

TEST_SUITE("graph") {
  TEST_CASE("constructors") {
    const Tree s = star(4);
    CHECK(s.degree(0) == 3);
    CHECK(s.graph().degree_sequence() == std::vector<int>{3, 1, 1, 1});
    const Tree p2 = path(2);
    CHECK(p2.graph().size() == 1);
    CHECK(p2.graph().has_edge(0, 1));
    const Tree p4 = path(4);
    CHECK(p4.graph().edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  }

  TEST_CASE("edge validation") {
    CHECK_THROWS_AS(from_edges(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(from_edges(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(from_edges(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Tree(from_edges(3, {{0, 1}})), DomainError);
    CHECK_THROWS_AS(Tree(from_edges(3, {{0, 1}, {1, 2}, {0, 2}})), DomainError);
  }

  TEST_CASE("adjacency is symmetric 0/1 with zero diagonal") {
    const Graph g = from_edges(5, {{0, 1}, {1, 2}, {3, 1}, {4, 2}});
    const auto a = g.adjacency<int>();
    for (int i = 0; i < 5; ++i) {
      CHECK(a(i, i) == 0);
      for (int j = 0; j < 5; ++j) {
        CHECK(a(i, j) == a(j, i));
        CHECK(a(i, j) == (g.has_edge(i, j) ? 1 : 0));
      }
    }
  }

  TEST_CASE("rooted product with K2") {
    const Graph p4 = rooted_product_k2(path(2).graph());
    CHECK(p4.order() == 4);
    CHECK(to_text(char_poly(p4)) == "1 0 -3 0 1");
    CHECK(p4.has_edge(0, 2));
    CHECK(p4.has_edge(1, 3));
    const Graph k2 = rooted_product_k2(path(1).graph());
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const Tree t = random_tree(1 + i % 15, rng);
      const Graph x = rooted_product_k2(t.graph());
      CHECK(x.order() == 2 * t.order());
      CHECK(x.size() == t.graph().size() + t.order());
      CHECK(x.is_tree());
      // block structure [[A, I], [I, 0]]
      const int n = t.order();
      const auto a = x.adjacency<int>();
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          CHECK(a(u, v) == (t.graph().has_edge(u, v) ? 1 : 0));
          CHECK(a(u, n + v) == (u == v ? 1 : 0));
          CHECK(a(n + u, n + v) == 0);
        }
    }
  }

  TEST_CASE("remove vertices relabels in order") {
    const Graph p5 = path(5).graph();
    const Graph g = p5.remove_vertices({2});
    CHECK(g.order() == 4);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(g.is_forest());
    CHECK_FALSE(g.is_connected());
  }

  TEST_CASE("edge-list text") {
    const Graph g = parse_edge_list("4\n0 1\n1 2\n1 3\n");
    CHECK(g.order() == 4);
    CHECK(g.degree(1) == 3);
    CHECK(parse_edge_list(write_edge_list(g)).edges() == g.edges());
    CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), InputError);
    CHECK(parse_graph_auto("A_").order() == 2);
    CHECK(parse_graph_auto(">>graph6<<A_").size() == 1);
    CHECK(parse_graph_auto("2\n0 1\n").size() == 1);
  }

  TEST_CASE("canonical form identifies isomorphic trees") {
    const Tree a(from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    const Tree b(from_edges(5, {{3, 0}, {0, 4}, {4, 1}, {1, 2}}));
    const Tree c(from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}));
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));
  }
}
