#include <random>

#include "amm/errors.hpp"
#include "amm/poly.hpp"
#include "doctest.h"

using namespace amm;

TEST_SUITE("poly") {
  TEST_CASE("arithmetic and text form") {
    const IntPoly a{1, 2, 3};
    const IntPoly b{-1, 1};
    CHECK(to_text(a * b) == "-1 -1 -1 3");
    CHECK((a - a).is_zero());
    CHECK(IntPoly().degree() == -1);
    CHECK(to_text(IntPoly()) == "0");
    CHECK(parse_int_poly("-1 -1 -1 3") == a * b);
    CHECK(a.derivative() == IntPoly{2, 6});
    CHECK(a.evaluate<Integer>(Integer(2)) == 17);
  }

  TEST_CASE("division and inverses") {
    const RatPoly p{Rational(-1), Rational(-1), Rational(1)};  // t^2 - t - 1
    const RatPoly d{Rational(5), Rational(1)};
    const RatPoly inv = inverse_mod(d, p);
    CHECK(mod(d * inv, p) == RatPoly::constant(1));
    RatPoly q, r;
    divmod(RatPoly{Rational(1), Rational(0), Rational(0), Rational(1)}, p, q, r);
    CHECK(q * p + r == RatPoly{Rational(1), Rational(0), Rational(0), Rational(1)});
    CHECK(r.degree() < 2);
    CHECK_THROWS_AS(inverse_mod(RatPoly{Rational(-1), Rational(1)}, RatPoly{Rational(-1), Rational(0), Rational(1)}),
                    DomainError);
  }

  TEST_CASE("gcd and squarefree part") {
    const IntPoly k13{0, 0, -3, 0, 1};  // t^4 - 3t^2
    CHECK(squarefree_part(k13) == IntPoly{0, -3, 0, 1});
    CHECK_FALSE(is_squarefree(k13));
    const IntPoly p4{1, 0, -3, 0, 1};
    CHECK(squarefree_part(p4) == p4);
    CHECK(is_squarefree(p4));
    CHECK(squarefree_part(IntPoly{0, 0, 1}) == IntPoly{0, 1});
    CHECK_THROWS_AS(squarefree_part(IntPoly()), DomainError);
    CHECK(gcd(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{1, 1});
    CHECK(gcd(IntPoly{2, 4}, IntPoly{3}) == IntPoly{1});
  }

  TEST_CASE("squarefree part of random products") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
      IntPoly f{coef(rng), coef(rng), 1};
      IntPoly g{coef(rng), 1};
      if (gcd(f, g).degree() > 0 || !is_squarefree(f)) continue;
      const IntPoly h = f * f * g * g * g * f;
      const IntPoly s = squarefree_part(h);
      CHECK(is_squarefree(s));
      CHECK(s == primitive_part(f * g));
      CHECK(exact_divide(h, s) == f * f * g * g);
    }
  }
}
