#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "partalg/jucys_murphy.hpp"
#include "partalg/json_io.hpp"

using namespace partalg;

TEST_CASE("diagrams use signed labels") {
  Diagram const d = parse_diagram("1 2' | 2 1'");
  CHECK(diagram_to_json(d).dump() == "[[1,-2],[2,-1]]");
  CHECK(diagram_from_json(Json::parse("[[2,-1],[-2,1]]")) == d);
  CHECK(diagram_from_json(Json::parse("[[1],[-1],[2,-2]]"), 2).rank() == 2);
  CHECK_THROWS_AS(diagram_from_json(Json::parse("[[1],[-1]]"), 2), MalformedPartition);
}

TEST_CASE("diagram JSON round-trips") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    Diagram const d = oracle::random_diagram(1 + trial % 6, rng);
    REQUIRE(diagram_from_json(diagram_to_json(d), d.rank()) == d);
  }
}

TEST_CASE("malformed diagram JSON is rejected") {
  CHECK_THROWS_AS(diagram_from_json(Json::parse("{}")), ParseError);
  CHECK_THROWS_AS(diagram_from_json(Json::parse("[[1, \"a\"]]")), ParseError);
  CHECK_THROWS_AS(diagram_from_json(Json::parse("[[]]")), ParseError);
  CHECK_THROWS_AS(diagram_from_json(Json::parse("[[0]]")), MalformedPartition);
  CHECK_THROWS_AS(diagram_from_json(Json::parse("[[1, 1], [-1]]")),
                  MalformedPartition);
  CHECK_THROWS_AS(diagram_from_json(Json::parse("[[1, 2], [-1]]")),
                  MalformedPartition);
}

TEST_CASE("either diagram syntax is accepted") {
  CHECK(parse_diagram_any("  [[1,-2],[2,-1]]") == parse_diagram_any("1 2' | 2 1'"));
  CHECK_THROWS_AS(parse_diagram_any("[[1,"), ParseError);
}

TEST_CASE("element JSON lists terms by text form") {
  JMCache const c(3);
  Json const    j = element_to_json(c.L(HalfIndex::whole(2)));
  CHECK(j["rank"] == 3);
  REQUIRE(j["terms"].size() == 5);
  std::string previous;
  for (auto const& t : j["terms"]) {
    std::string const text =
        diagram_from_json(t["diagram"], 3).to_string();
    CHECK(previous < text);
    previous = text;
  }
  CHECK(element_from_json(j) == c.L(HalfIndex::whole(2)));
}

TEST_CASE("element JSON round-trips with polynomial coefficients") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement const a = oracle::random_element(1 + trial % 4, rng);
    REQUIRE(element_from_json(element_to_json(a)) == a);
  }
  JMCache const c(2);
  AlgebraElement const z32 = c.central(HalfIndex::half(1));
  Json const j = element_to_json(z32);
  CHECK(element_from_json(j) == z32);
}

TEST_CASE("integers beyond 64 bits become strings") {
  Integer const big = Integer(Integer(1) << 70);
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_to_json(-5) == -5);
  CHECK_THROWS_AS(integer_from_json(Json("x1")), ParseError);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), ParseError);
}

TEST_CASE("report JSON carries the documented fields only") {
  auto const report = verify_suite(SuiteId::r_2, 2);
  Json const j      = report_to_json(report);
  CHECK(j["suite"] == "r_2");
  CHECK(j["rank"] == 2);
  CHECK(j["vacuous"] == false);
  CHECK_FALSE(j.contains("n"));
  CHECK_FALSE(j.contains("elapsed_seconds"));
  REQUIRE(j["checks"].size() == report.checks.size());
  for (auto const& check : j["checks"]) {
    CHECK(check.size() == 3);
    CHECK(check["pass"] == true);
  }
  Json const again = report_to_json(verify_suite(SuiteId::r_2, 2));
  CHECK(again.dump() == j.dump());
}

TEST_CASE("tensor report JSON includes n") {
  Json const j = report_to_json(verify_tensor_suite(TensorSuite::commutant, {2, 2}));
  CHECK(j["suite"] == "tensor:commutant");
  CHECK(j["n"] == 2);
  CHECK(j["rank"] == 2);
}

TEST_CASE("operator export is a sorted triplet list") {
  RepConfig const cfg{2, 1};
  Json const      j = operator_to_json(rep_operator(p_element(1, 1), cfg));
  CHECK(j.dump()
        == R"({"n":2,"r":1,"entries":[[[1],[1],1],[[1],[2],1],[[2],[1],1],[[2],[2],1]]})");
}
