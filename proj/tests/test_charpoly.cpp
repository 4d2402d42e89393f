#include <random>

#include "amm/charpoly.hpp"
#include "amm/errors.hpp"
#include "amm/rooted_family.hpp"
#include "amm/tree_enum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amm;

TEST_SUITE("charpoly") {
  TEST_CASE("fixtures") {
    CHECK(to_text(char_poly(path(2))) == "-1 0 1");
    CHECK(to_text(char_poly(star(4))) == "0 0 -3 0 1");
    CHECK(to_text(matching_char_poly(path(4))) == "1 0 -3 0 1");
    CHECK(to_text(matching_char_poly(star(4))) == "0 0 -3 0 1");
    CHECK(to_text(matching_char_poly(path(1))) == "0 1");
  }

  TEST_CASE("vertex-deleted polynomials") {
    const auto p3 = vertex_deleted_polys(path(3));
    CHECK(p3[1] == IntPoly{0, 0, 1});
    CHECK(p3[0] == IntPoly{-1, 0, 1});
    CHECK(p3[2] == IntPoly{-1, 0, 1});
    CHECK_THROWS_AS(vertex_deleted_polys(path(1)), DomainError);
    const Graph cyc = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (const auto& p : vertex_deleted_polys(cyc)) CHECK(p == IntPoly{0, -2, 0, 1});
  }

  TEST_CASE("derivative identity on all trees up to 10") {
    for (int n = 2; n <= 10; ++n)
      for_each_tree(n, [&](const Tree& t) {
        IntPoly sum;
        for (const auto& p : vertex_deleted_polys(t)) sum += p;
        CHECK(sum == char_poly(t).derivative());
      });
  }

  TEST_CASE("agrees with interpolated determinant") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
      const Tree t = random_tree(1 + i % 10, rng);
      CHECK(char_poly(t) == oracle::char_poly(t));
    }
    const Graph g = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(char_poly(g) == oracle::char_poly(g));
    CHECK(char_poly(empty_graph(3)) == IntPoly{0, 0, 0, 1});
  }

  TEST_CASE("matching recurrence equals the characteristic polynomial") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
      const Tree t = random_tree(1 + static_cast<int>(rng() % 16), rng);
      CHECK(matching_char_poly(t) == char_poly(t));
    }
    CHECK_THROWS_AS(forest_char_poly(from_edges(3, {{0, 1}, {1, 2}, {2, 0}})), DomainError);
  }

  TEST_CASE("18-vertex factorisation is monic of degree 18") {
    const IntPoly p = t_star_char_poly();
    CHECK(p.degree() == 18);
    CHECK(p.leading() == 1);
    CHECK(is_squarefree(p));
  }
}
