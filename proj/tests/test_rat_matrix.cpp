#include <random>

#include "amm/errors.hpp"
#include "amm/rat_matrix.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amm;

namespace {
std::vector<std::vector<Rational>> rows_of(const RatMatrix& m) {
  std::vector<std::vector<Rational>> r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}
}  // namespace

TEST_SUITE("rat_matrix") {
  TEST_CASE("trivial ranks") {
    CHECK(exact_rank(RatMatrix(3, 3, Rational(0))) == 0);
    CHECK(exact_rank(RatMatrix::identity(5)) == 5);
    CHECK(kernel_exact(RatMatrix::identity(4)).empty());
    const RatMatrix half(2, 2, Rational(1, 2));
    const auto k = kernel_exact(half);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
  }

  TEST_CASE("Bareiss agrees with rational elimination") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4), dim(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
      const int r = dim(rng), c = dim(rng);
      RatMatrix m(r, c);
      // low-rank products make ties likely
      const int inner = 1 + trial % 4;
      RatMatrix a(r, inner), b(inner, c);
      for (auto& x : a.data()) x = Rational(num(rng), den(rng));
      for (auto& x : b.data()) x = Rational(num(rng), den(rng));
      for (auto& x : a.data()) x.canonicalize();
      for (auto& x : b.data()) x.canonicalize();
      m = a * b;
      const int expected = oracle::rank(rows_of(m));
      CHECK(exact_rank(m) == expected);
      CHECK(bareiss_rank(clear_denominators(m)) == expected);
      const auto k = kernel_exact(m);
      CHECK(static_cast<int>(k.size()) == c - expected);
      for (const auto& v : k)
        for (const auto& x : multiply(m, v)) CHECK(x == 0);
    }
  }

  TEST_CASE("serialisation round trips") {
    RatMatrix m(2, 3);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(-7, 3);
    m(1, 2) = Rational(5);
    CHECK(to_csv(m) == "1/2,-7/3,0\n0,0,5\n");
    CHECK(parse_rat_csv(to_csv(m)) == m);
    CHECK(parse_rat_json(to_json(m)) == m);
    CHECK(to_json(m).find("\"num\":\"-7\"") != std::string::npos);
    CHECK_THROWS_AS(parse_rat_csv("1/2,1\n3\n"), InputError);
    CHECK_THROWS_AS(parse_rat_csv("1/0\n"), InputError);
  }
}
