#include <random>

#include "amm/errors.hpp"
#include "amm/root_sum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace amm;

namespace {
RatPoly rp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(v);
}
}  // namespace

TEST_SUITE("root_sum") {
  TEST_CASE("fixtures") {
    CHECK(trace_over_roots(rp({0, 0, 1}), rp({1}), IntPoly{-1, 0, 1}) == 2);
    CHECK(trace_over_roots(rp({1}), rp({5, 1}), IntPoly{-1, -1, 1}) == Rational(11, 29));
    CHECK(trace_over_roots(rp({0, 1}), rp({1}), IntPoly{-1, -1, 1}) == 1);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(trace_over_roots(rp({1}), rp({-1, 1}), IntPoly{-1, 0, 1}), DomainError);
    CHECK_THROWS_AS(trace_over_roots(rp({1}), rp({1}), IntPoly{0, 0, 1}), DomainError);
    CHECK_THROWS_AS(RootSum{IntPoly()}, DomainError);
  }

  TEST_CASE("monomials give Newton sums") {
    const IntPoly psi{3, -1, 0, 2, 1};  // t^4 + 2t^3 - t + 3
    REQUIRE(is_squarefree(psi));
    const auto p = newton_power_sums(psi, 12);
    for (int k = 0; k < 12; ++k) CHECK(trace_over_roots(RatPoly::monomial(k, Rational(1)), rp({1}), psi) == p[k]);
    CHECK(p[0] == 4);
    CHECK(p[1] == -2);  // -e1
    // p2 = e1^2 - 2 e2 with e1 = -2, e2 = 0
    CHECK(p[2] == 4);
  }

  TEST_CASE("scaling the modulus does not change sums") {
    const IntPoly psi{-1, -1, 1};
    const IntPoly scaled = psi * IntPoly{-3};
    const RatPoly n = rp({2, 0, 7}), d = rp({1, 3});
    CHECK(trace_over_roots(n, d, psi) == trace_over_roots(n, d, scaled));
  }

  TEST_CASE("float oracle over numerically computed roots") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-5, 5), deg(1, 12);
    int tested = 0;
    while (tested < 200) {
      const int d = deg(rng);
      std::vector<Integer> c(d + 1);
      for (auto& x : c) x = coef(rng);
      c[d] = 1 + std::abs(coef(rng));
      const IntPoly psi(c);
      if (psi.degree() != d || !is_squarefree(psi)) continue;
      const RatPoly num = rp({coef(rng), coef(rng), coef(rng)});
      const RatPoly den = rp({coef(rng) == 0 ? 7 : 7 + std::abs(coef(rng)), 0, 1});  // c + t^2, c > 0
      const auto roots = oracle::roots(psi);
      std::complex<double> direct = 0;
      bool ill = false;
      for (auto z : roots) {
        const auto dz = den.evaluate<std::complex<double>>(z);
        if (std::abs(dz) < 1e-3) ill = true;
        direct += num.evaluate<std::complex<double>>(z) / dz;
      }
      // skip clustered roots where the float oracle itself is unreliable
      double min_gap = 1e9;
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) min_gap = std::min(min_gap, std::abs(roots[i] - roots[j]));
      if (ill || min_gap < 1e-3) continue;
      const double exact = trace_over_roots(num, den, psi).get_d();
      CHECK(std::abs(exact - direct.real()) <= 1e-9 * std::max(1.0, std::abs(exact)));
      CHECK(std::abs(direct.imag()) < 1e-8);
      ++tested;
    }
  }
}
