#include <random>

#include "amm/amm_exact.hpp"
#include "amm/charpoly.hpp"
#include "amm/errors.hpp"
#include "amm/matchings.hpp"
#include "amm/tree_enum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amm;

namespace {
std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

Integer det3(const IntMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}
}  // namespace

TEST_SUITE("matchings") {
  TEST_CASE("counts") {
    CHECK(matching_counts(path(4)) == ints({1, 3, 1}));
    CHECK(matching_counts(star(4)) == ints({1, 3, 0}));  // m_0 .. m_{floor(n/2)}
    CHECK(matching_counts(path(1)) == ints({1}));
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
      const Tree t = random_tree(1 + i % 14, rng);
      const auto brute = oracle::matchings(t);
      const auto fast = matching_counts(t);
      REQUIRE(fast.size() == brute.size());
      for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k] == Integer(static_cast<long>(brute[k])));
      const IntPoly phi = char_poly(t);
      for (std::size_t k = 0; k < fast.size(); ++k)
        CHECK(phi[t.order() - 2 * static_cast<int>(k)] == (k % 2 ? -fast[k] : fast[k]));
    }
    CHECK_THROWS_AS(matching_counts(Tree(from_edges(3, {{0, 1}}))), DomainError);
  }

  TEST_CASE("perfect and near-perfect matchings") {
    CHECK(has_perfect_matching(path(4)));
    CHECK_FALSE(has_perfect_matching(star(4)));
    CHECK_FALSE(near_perfect_vertex(star(4)).has_value());
    for (int v = 0; v < 4; ++v) CHECK_FALSE(has_perfect_matching(star(4).graph().remove_vertices({v})));
    CHECK_FALSE(has_perfect_matching(path(5)));
    const auto z = near_perfect_vertex(path(5));
    REQUIRE(z.has_value());
    CHECK(*z == 0);
    CHECK(has_perfect_matching(path(5).graph().remove_vertices({2})));
    // greedy leaf matching against the brute-force count of perfect matchings
    for (int n = 1; n <= 12; ++n)
      for_each_tree(n, [&](const Tree& t) {
        const auto m = oracle::matchings(t);
        CHECK(has_perfect_matching(t) == (n % 2 == 0 && m[n / 2] > 0));
      });
  }

  TEST_CASE("leaf next to a degree-two vertex") {
    CHECK(leaf_next_to_degree_two(path(3)) == std::pair<Vertex, Vertex>{0, 1});
    CHECK(leaf_next_to_degree_two(path(4)) == std::pair<Vertex, Vertex>{0, 1});
    CHECK_THROWS_AS(leaf_next_to_degree_two(star(4)), DomainError);
    for (int n = 3; n <= 14; ++n)
      for_each_tree(n, [&](const Tree& t) {
        if (!is_squarefree(matching_char_poly(t))) return;
        const auto [u, v] = leaf_next_to_degree_two(t);
        CHECK(t.degree(u) == 1);
        CHECK(t.degree(v) == 2);
        CHECK(t.graph().has_edge(u, v));
        if (!has_perfect_matching(t)) {
          const auto z = near_perfect_vertex(t);
          REQUIRE(z.has_value());
          CHECK(has_perfect_matching(t.graph().remove_vertices({*z})));
        }
      });
  }

  TEST_CASE("P6 certificate, case C1") {
    const LowerBoundCertificate c = lower_bound_certificate(path(6));
    CHECK(c.kind == CertificateCase::C1);
    CHECK(c.vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(c.powers == std::vector<int>{1, 3, 5});
    CHECK(c.ell == 2);
    CHECK(c.q == 2);
    // rows phi(P6 - u) at t^1, t^3, t^5 for u = 0, 1, 2
    const std::vector<std::vector<int>> rows = {{3, -4, 1}, {1, -3, 1}, {2, -3, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(c.submatrix(i, j) == rows[i][j]);
    CHECK(c.det == -1);
    CHECK(c.closed_form_det == -1);
    CHECK(c.side_claims_hold);
    CHECK(to_json(c).find("\"case\":\"C1\"") != std::string::npos);
  }

  TEST_CASE("P5 certificate, case C2") {
    const LowerBoundCertificate c = lower_bound_certificate(path(5));
    CHECK(c.kind == CertificateCase::C2);
    CHECK(c.powers == std::vector<int>{0, 2, 4});
    CHECK(c.det == -1);
    CHECK(c.closed_form_det == -1);
    CHECK(c.ell == 2);
    CHECK(abs(c.det) == c.ell - 1);
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(lower_bound_certificate(path(4)), DomainError);
    CHECK_THROWS_AS(lower_bound_certificate(path(3)), DomainError);
    CHECK_THROWS_AS(lower_bound_certificate(star(5)), DomainError);
  }

  TEST_CASE("all simple trees 5..12: certificate rows match the coefficient matrix") {
    int cases[3] = {0, 0, 0};
    for (int n = 5; n <= 12; ++n)
      for_each_tree(n, [&](const Tree& t) {
        if (!is_squarefree(matching_char_poly(t))) return;
        const LowerBoundCertificate c = lower_bound_certificate(t);
        ++cases[static_cast<int>(c.kind)];
        const IntMatrix full = coefficient_matrix(t);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) CHECK(c.submatrix(i, j) == full(c.vertices[i], c.powers[j]));
        CHECK(det3(c.submatrix) == c.det);
        CHECK(c.det != 0);
        CHECK(c.det == c.closed_form_det);
        CHECK(c.side_claims_hold);
        CHECK(average_mixing_exact(t).rank >= 3);
      });
    CHECK(cases[0] > 0);
    CHECK(cases[1] > 0);
    CHECK(cases[2] > 0);
  }
}
