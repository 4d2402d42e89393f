#include <algorithm>
#include <filesystem>
#include <fstream>

#include "amm/census.hpp"
#include "amm/errors.hpp"
#include "amm/tree_enum.hpp"
#include "doctest.h"

using namespace amm;

namespace {
CensusOptions opts(int lo, int hi, RankMethod m = RankMethod::CoeffFast, int threads = 1) {
  CensusOptions o;
  o.n_min = lo;
  o.n_max = hi;
  o.method = m;
  o.threads = threads;
  return o;
}

bool contains(const std::vector<CensusRecord>& r, const CensusRecord& x) {
  return std::find(r.begin(), r.end(), x) != r.end();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}
}  // namespace

TEST_SUITE("census") {
  TEST_CASE("reference rows") {
    const auto r = run_census(opts(2, 10));
    REQUIRE(r.complete);
    CHECK(r.records.front() == CensusRecord{2, 1, 1, 1});
    CHECK(contains(r.records, {9, 5, 19, 18}));
    CHECK(contains(r.records, {10, 4, 1, 0}));
    for (int n = 2; n <= 10; ++n) {
      std::uint64_t total = 0;
      for (const auto& x : r.records)
        if (x.n == n) {
          total += x.trees;
          CHECK(x.simple_trees <= x.trees);
        }
      CHECK(total == count_trees(n));
    }
  }

  TEST_CASE("methods agree up to 10") {
    const auto fast = run_census(opts(2, 10, RankMethod::CoeffFast)).records;
    CHECK(run_census(opts(2, 10, RankMethod::Exact)).records == fast);
    CHECK(run_census(opts(2, 10, RankMethod::Float)).records == fast);
  }

  TEST_CASE("classification") {
    CHECK(classify_tree(path(4), RankMethod::Exact).rank == 2);
    CHECK(classify_tree(path(4), RankMethod::Exact).simple);
    CHECK(classify_tree(star(6), RankMethod::CoeffFast).rank == 6);
    CHECK_FALSE(classify_tree(star(6), RankMethod::CoeffFast).simple);
    CHECK(parse_method("float") == RankMethod::Float);
    CHECK(to_string(RankMethod::CoeffFast) == "coeff-fast");
    CHECK_THROWS_AS(parse_method("fast"), InputError);
  }

  TEST_CASE("thread count does not change output") {
    auto one = opts(2, 12, RankMethod::CoeffFast, 1);
    auto eight = opts(2, 12, RankMethod::CoeffFast, 8);
    one.chunk_size = eight.chunk_size = 37;
    CHECK(census_csv(run_census(one).records) == census_csv(run_census(eight).records));
  }

  TEST_CASE("interrupt and resume") {
    const std::string expected = census_csv(run_census(opts(2, 11)).records);
    for (int threads : {1, 3}) {
      const auto ck = scratch("amm_census_ck_" + std::to_string(threads) + ".json");
      auto o = opts(2, 11, RankMethod::CoeffFast, threads);
      o.chunk_size = 50;
      o.checkpoint_path = ck.string();
      o.stop_after_chunks = 2;
      int runs = 0;
      CensusOutcome r;
      do {
        r = run_census(o);
        ++runs;
        REQUIRE(runs < 100);
      } while (!r.complete);
      CHECK(runs > 3);
      CHECK(census_csv(r.records) == expected);
      // a completed checkpoint answers again without recomputation
      CHECK(census_csv(run_census(o).records) == expected);
      std::filesystem::remove(ck);
    }
  }

  TEST_CASE("checkpoint mismatch") {
    const auto ck = scratch("amm_census_mismatch.json");
    auto o = opts(2, 6);
    o.checkpoint_path = ck.string();
    run_census(o);
    o.method = RankMethod::Exact;
    CHECK_THROWS_AS(run_census(o), InputError);
    o.method = RankMethod::CoeffFast;
    o.chunk_size = 7;
    CHECK_THROWS_AS(run_census(o), InputError);
    std::ofstream(ck) << "{\"format\": \"something else\"}";
    o.chunk_size = 1024;
    CHECK_THROWS_AS(run_census(o), InputError);
    std::ofstream(ck) << "not json";
    CHECK_THROWS_AS(run_census(o), InputError);
    std::filesystem::remove(ck);
  }

  TEST_CASE("cancel flag") {
    std::atomic<bool> cancel{true};
    auto o = opts(2, 8);
    o.cancel = &cancel;
    CHECK_FALSE(run_census(o).complete);
  }

  TEST_CASE("csv round trip") {
    const auto r = run_census(opts(2, 7)).records;
    const std::string csv = census_csv(r);
    CHECK(csv.rfind("n,rank,trees,simple_trees\n2,1,1,1\n", 0) == 0);
    CHECK(parse_census_csv(csv) == r);
    CHECK_THROWS_AS(parse_census_csv("n,rank\n1,2\n"), InputError);
    CHECK_THROWS_AS(parse_census_csv("n,rank,trees,simple_trees\n1,2,x,0\n"), InputError);
  }
}
