#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "partalg/element.hpp"

using namespace partalg;

namespace {

  // Product by composing every pair of terms with the breadth-first oracle.
  std::map<oracle::Blocks, IntPolynomial> oracle_product(
      AlgebraElement const& a, AlgebraElement const& b) {
    std::map<oracle::Blocks, IntPolynomial> out;
    for (auto const& [da, ca] : a.terms()) {
      for (auto const& [db, cb] : b.terms()) {
        auto const c = oracle::compose_bfs(oracle::blocks_of(da),
                                           oracle::blocks_of(db), a.rank());
        out[c.blocks] += ca * cb * IntPolynomial::monomial(1, c.middle_components);
      }
    }
    std::erase_if(out, [](auto const& kv) { return kv.second.is_zero(); });
    return out;
  }

  std::map<oracle::Blocks, IntPolynomial> as_map(AlgebraElement const& a) {
    std::map<oracle::Blocks, IntPolynomial> out;
    for (auto const& [d, c] : a.terms()) {
      out[oracle::blocks_of(d)] = c;
    }
    return out;
  }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  IntPolynomial const z = z_poly();
  IntPolynomial const p = z * z - 3;
  CHECK(p.to_string() == "-3 + z^2");
  CHECK(p.evaluate(4) == 13);
  CHECK((p - p).is_zero());
  CHECK((z + 1) * (z - 1) == p + 2);
  CHECK(IntPolynomial::from_coefficients({1, 0, 0}).degree() == 0);
  CHECK(p.shifted(2).coefficient(4) == 1);
}

TEST_CASE("large coefficients stay exact") {
  IntPolynomial big(Integer(Integer(1) << 80));
  big *= big;
  CHECK(big.coefficient(0) == Integer(Integer(1) << 160));
}

TEST_CASE("generator relations hold in the algebra") {
  int const            k  = 3;
  AlgebraElement const z  = AlgebraElement::scalar(k, z_poly());
  AlgebraElement const p1 = p_element(1, k);
  AlgebraElement const s1 = s_element(1, k);
  AlgebraElement const ph = p_half_element(1, k);
  CHECK(p1 * p1 == z * p1);
  CHECK(s1 * s1 == AlgebraElement::identity(k));
  CHECK(ph * ph == ph);
  CHECK(p1 * ph * p1 == p1);
}

TEST_CASE("products agree with the breadth-first oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    int const            k = 1 + trial % 4;
    AlgebraElement const a = oracle::random_element(k, rng);
    AlgebraElement const b = oracle::random_element(k, rng);
    REQUIRE(as_map(a * b) == oracle_product(a, b));
  }
}

TEST_CASE("multiplication is associative and distributive") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    int const            k = 1 + trial % 4;
    AlgebraElement const a = oracle::random_element(k, rng);
    AlgebraElement const b = oracle::random_element(k, rng);
    AlgebraElement const c = oracle::random_element(k, rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("star is an anti-homomorphism and an involution") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int const            k = 1 + trial % 4;
    AlgebraElement const a = oracle::random_element(k, rng);
    AlgebraElement const b = oracle::random_element(k, rng);
    REQUIRE(star(a * b) == star(b) * star(a));
    REQUIRE(star(star(a)) == a);
  }
}

TEST_CASE("half elements multiply to half elements") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraElement a = oracle::random_element(3, rng);
    AlgebraElement b = oracle::random_element(3, rng);
    std::vector<AlgebraElement::Term> ta, tb;
    for (auto const& t : a.terms()) {
      if (is_half(t.first)) {
        ta.push_back(t);
      }
    }
    for (auto const& t : b.terms()) {
      if (is_half(t.first)) {
        tb.push_back(t);
      }
    }
    auto const ha = AlgebraElement::from_terms(3, ta);
    auto const hb = AlgebraElement::from_terms(3, tb);
    REQUIRE(ha.half_flag());
    REQUIRE((ha * hb).all_half());
    REQUIRE((ha * hb).half_flag());
  }
  CHECK_FALSE(p_element(3, 3).half_flag());
  CHECK_THROWS_AS(p_element(3, 3).as_half(), Error);
}

TEST_CASE("embedding is a homomorphism") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement const a = oracle::random_element(2, rng);
    AlgebraElement const b = oracle::random_element(2, rng);
    REQUIRE(embed(a * b, 4) == embed(a, 4) * embed(b, 4));
    REQUIRE(embed(a, 3).all_half());
  }
}

TEST_CASE("evaluation substitutes the parameter") {
  AlgebraElement const p1 = p_element(1, 2);
  AlgebraElement const sq = evaluate(p1 * p1, 5);
  CHECK(sq.coefficient(p_diagram(1, 2)) == IntPolynomial(5));
  CHECK(sq == 5 * p1);
}

TEST_CASE("mismatched ranks are rejected") {
  CHECK_THROWS_AS(p_element(1, 2) * p_element(1, 3), RankMismatch);
  CHECK_THROWS_AS(p_element(1, 2) + p_element(1, 3), RankMismatch);
}
