#include <random>

#include "amm/errors.hpp"
#include "amm/graph6.hpp"
#include "amm/tree_enum.hpp"
#include "doctest.h"

using namespace amm;

TEST_SUITE("graph6") {
  TEST_CASE("hand-encoded strings") {
    CHECK(write_graph6(path(2).graph()) == "A_");
    const Graph g = parse_graph6("A_");
    CHECK(g.order() == 2);
    CHECK(g.size() == 1);
    // P3: pairs (0,1) (0,2) (1,2) -> bits 101 -> 101000 = 40 -> 'g'
    CHECK(write_graph6(path(3).graph()) == "Bg");
    // K_{1,3} centred at 0: (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) -> 110100 -> 's'
    CHECK(write_graph6(star(4).graph()) == "Cs");
    CHECK(parse_graph6("Cs").degree(0) == 3);
    CHECK(write_graph6(empty_graph(1)) == "@");
  }

  TEST_CASE("long size header") {
    const Graph big = path(70).graph();
    const std::string s = write_graph6(big);
    CHECK(s[0] == 126);
    CHECK(parse_graph6(s).edges() == big.edges());
  }

  TEST_CASE("malformed input carries offsets") {
    CHECK_THROWS_AS(parse_graph6(""), InputError);
    CHECK_THROWS_AS(parse_graph6("A"), InputError);   // truncated
    CHECK_THROWS_AS(parse_graph6("A__"), InputError); // too long
    CHECK_THROWS_AS(parse_graph6("A\x01"), InputError);
    try {
      parse_graph6("C\x05");
      FAIL("no throw");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("offset 1") != std::string::npos);
    }
  }

  TEST_CASE("round trip on random trees") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
      const Tree t = random_tree(1 + i % 20, rng);
      const std::string s = write_graph6(t.graph());
      const Graph g = parse_graph6(s);
      CHECK(g.edges() == t.graph().edges());
      CHECK(write_graph6(g) == s);
    }
  }
}
