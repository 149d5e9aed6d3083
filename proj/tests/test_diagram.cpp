#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "partalg/diagram.hpp"
#include "partalg/polynomial.hpp"

using namespace partalg;

TEST_CASE("text form round-trips and is canonical") {
  Diagram const d = parse_diagram("2 1' | 1 2'");
  CHECK(d.rank() == 2);
  CHECK(d.to_string() == "1 2' | 2 1'");
  CHECK(parse_diagram(d.to_string()) == d);
  CHECK(parse_diagram("3' 1 1' | 2 2' | 3") == parse_diagram("1 1' 3' | 2 2' | 3"));
  CHECK(parse_diagram("1 | 1' | 2 2'", 2).rank() == 2);
  CHECK_THROWS_AS(parse_diagram("1 | 1'", 3), MalformedPartition);
}

TEST_CASE("malformed text is rejected") {
  CHECK_THROWS_AS(parse_diagram("1 1 | 1'"), MalformedPartition);
  CHECK_THROWS_AS(parse_diagram("1 | 2'"), MalformedPartition);
  CHECK_THROWS_AS(parse_diagram("1 x | 1'"), ParseError);
  CHECK_THROWS_AS(parse_diagram("1 2 | 1'", 1), MalformedPartition);
}

TEST_CASE("generators have the documented blocks") {
  CHECK(s_diagram(1, 3).to_string() == "1 2' | 2 1' | 3 3'");
  CHECK(p_diagram(2, 3).to_string() == "1 1' | 2 | 3 3' | 2'");
  CHECK(p_half_diagram(2, 3).to_string() == "1 1' | 2 3 2' 3'");
  CHECK_THROWS_AS(s_diagram(3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(p_diagram(0, 3), IndexOutOfRange);
  CHECK_THROWS_AS(p_half_diagram(3, 3), IndexOutOfRange);
}

TEST_CASE("composition removes middle components") {
  auto const s1 = compose(parse_diagram("1 1' | 2 2'"), parse_diagram("1 2' | 2 1'"));
  CHECK(s1.diagram == s_diagram(1, 2));
  CHECK(s1.removed_blocks == 0);

  auto const p1 = compose(parse_diagram("1 | 1'"), parse_diagram("1 | 1'"));
  CHECK(p1.diagram == p_diagram(1, 1));
  CHECK(p1.removed_blocks == 1);

  CHECK_THROWS_AS(compose(Diagram::identity(2), Diagram::identity(3)),
                  RankMismatch);
}

TEST_CASE("composition agrees with the breadth-first oracle on all rank-2 pairs") {
  auto const all = enumerate_diagrams(2);
  for (auto const& a : all) {
    for (auto const& b : all) {
      auto const got  = compose(a, b);
      auto const want = oracle::compose_bfs(oracle::blocks_of(a),
                                            oracle::blocks_of(b), 2);
      REQUIRE(oracle::blocks_of(got.diagram) == want.blocks);
      REQUIRE(got.removed_blocks == want.middle_components);
    }
  }
}

TEST_CASE("composition agrees with the oracle on random pairs up to rank 6") {
  std::mt19937 rng(7);
  for (int k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 300; ++trial) {
      Diagram const a    = oracle::random_diagram(k, rng);
      Diagram const b    = oracle::random_diagram(k, rng);
      auto const    got  = compose(a, b);
      auto const    want = oracle::compose_bfs(oracle::blocks_of(a),
                                               oracle::blocks_of(b), k);
      REQUIRE(oracle::blocks_of(got.diagram) == want.blocks);
      REQUIRE(got.removed_blocks == want.middle_components);
    }
  }
}

TEST_CASE("composition is associative including the removed count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int const     k = 1 + trial % 5;
    Diagram const a = oracle::random_diagram(k, rng);
    Diagram const b = oracle::random_diagram(k, rng);
    Diagram const c = oracle::random_diagram(k, rng);
    auto const    ab    = compose(a, b);
    auto const    ab_c  = compose(ab.diagram, c);
    auto const    bc    = compose(b, c);
    auto const    a_bc  = compose(a, bc.diagram);
    REQUIRE(ab_c.diagram == a_bc.diagram);
    REQUIRE(ab.removed_blocks + ab_c.removed_blocks
            == bc.removed_blocks + a_bc.removed_blocks);
  }
}

TEST_CASE("enumeration counts match the restricted growth string oracle") {
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(enumerate_diagrams(k, 4).size() == oracle::count_rgs(2 * k));
  }
  CHECK_THROWS_AS(enumerate_diagrams(5, 4), CapExceeded);
}

TEST_CASE("enumeration lists distinct diagrams") {
  auto const all = enumerate_diagrams(3, 4);
  std::set<std::string> keys;
  for (auto const& d : all) {
    keys.insert(std::string(d.key()));
  }
  CHECK(keys.size() == all.size());
}

TEST_CASE("involution reverses composition") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int const     k = 1 + trial % 5;
    Diagram const a = oracle::random_diagram(k, rng);
    Diagram const b = oracle::random_diagram(k, rng);
    REQUIRE(involute(involute(a)) == a);
    auto const ab = compose(a, b);
    auto const ba = compose(involute(b), involute(a));
    REQUIRE(involute(ab.diagram) == ba.diagram);
    REQUIRE(ab.removed_blocks == ba.removed_blocks);
  }
}

TEST_CASE("half diagrams are closed under composition") {
  std::mt19937 rng(5);
  int          tested = 0;
  while (tested < 200) {
    Diagram const a = oracle::random_diagram(3, rng);
    Diagram const b = oracle::random_diagram(3, rng);
    if (!is_half(a) || !is_half(b)) {
      continue;
    }
    ++tested;
    REQUIRE(is_half(compose(a, b).diagram));
  }
}

TEST_CASE("embedding adds identity strands and respects composition") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Diagram const a  = oracle::random_diagram(2, rng);
    Diagram const b  = oracle::random_diagram(2, rng);
    auto const    ab = compose(a, b);
    auto const    up = compose(embed(a, 4), embed(b, 4));
    REQUIRE(up.diagram == embed(ab.diagram, 4));
    REQUIRE(up.removed_blocks == ab.removed_blocks);
    REQUIRE(in_subalgebra(embed(a, 4), 4));
    REQUIRE(is_half(embed(a, 3)));
  }
  CHECK_THROWS_AS(embed(Diagram::identity(3), 2), RankTooSmall);
}

TEST_CASE("subalgebra membership distinguishes whole and half ranks") {
  Diagram const ph = p_half_diagram(2, 3);
  CHECK(in_subalgebra(ph, 6));
  CHECK(in_subalgebra(ph, 5));
  CHECK_FALSE(in_subalgebra(ph, 4));
  CHECK(in_subalgebra(p_diagram(2, 3), 4));
  CHECK_FALSE(in_subalgebra(p_diagram(3, 3), 5));
}
