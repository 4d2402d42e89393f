#include "amm/errors.hpp"
#include "amm/verify.hpp"
#include "doctest.h"

using namespace amm;

TEST_SUITE("verify") {
  TEST_CASE("named suites pass") {
    for (const char* suite : {"identities", "rooted", "kernel", "float"})
      for (const auto& r : run_suite(suite, 8)) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
    for (const auto& r : run_suite("lowerbound", 12)) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
    CHECK_THROWS_AS(run_suite("nope", 5), InputError);
  }

  TEST_CASE("projector invariants to 12") { CHECK(check_projectors(12).passed); }

  TEST_CASE("kernel weights to 10") { CHECK(check_kernel_weights(10).passed); }

  TEST_CASE("star report") {
    const auto rows = star_report(2, 11);
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows) {
      const int n = r.leaves;
      // derived: 1/2 for the centre, n - 2 + 3/(2n) over the leaves
      Rational want(2 * n * n - 3 * n + 3, 2 * n);
      want.canonicalize();
      CHECK(r.exact_trace == want);
      CHECK(r.exact_rank == (n == 2 ? 2 : n + 1));
    }
    CHECK(rows[0].printed_trace == Rational(13, 9));
    CHECK(star_report_text(rows).rfind("leaves,", 0) == 0);
  }
}
