#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nqr/error.hpp"
#include "nqr/parse.hpp"
#include "nqr/schedler.hpp"

using namespace nqr;
using testing::doubled;

TEST_CASE("expression examples") {
  auto j = doubled("jordan");
  auto zero = parse_expression("cyc(a,a*) - cyc(a*,a)", *j);
  REQUIRE(std::holds_alternative<NecklaceSum>(zero));
  CHECK(std::get<NecklaceSum>(zero).is_zero());

  auto h = parse_expression("h[(a,1),(a*,2)]", *j);
  REQUIRE(std::holds_alternative<HeightSum>(h));
  const auto& hsum = std::get<HeightSum>(h);
  REQUIRE(hsum.size() == 1);
  CHECK(hsum.begin()->first.components().size() == 1);

  auto q = doubled("a2");
  CHECK_THROWS_AS(parse_expression("cyc(a,a)", *q), InvalidCycle);
}

TEST_CASE("coefficients, scalars and promotion") {
  auto j = doubled("jordan");
  auto x = parse_necklace_sum("3/2*cyc(a) - (1/2)*cyc(a) + 2*(cyc(a*) - cyc(a*))", *j);
  CHECK(x == parse_necklace_sum("cyc(a)", *j));
  auto y = parse_height_sum("hbar^2*cyc(a,a*) + 2", *j);
  CHECK(y.size() == 2);
  CHECK(y == parse_height_sum("2 + hbar*hbar*h[(a,1),(a*,2)]", *j));
  CHECK_THROWS_AS(parse_expression("cyc(a) & cyc(a*)", *j), ParseError);
  CHECK(std::holds_alternative<HeightSum>(parse_expression("h[(a,1)] & h[(a*,2)]", *j)));
  CHECK(parse_height_sum("e(v) & e(v)", *j).begin()->first.idempotents().size() == 2);
}

TEST_CASE("syntax errors report line and column") {
  auto j = doubled("jordan");
  auto position = [&](const std::string& text) {
    try {
      parse_expression(text, *j);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(position("cyc(a,b)") == std::pair{1, 7});
  CHECK(position("cyc(a) +\n  cyc(") == std::pair{2, 7});
  CHECK(position("cyc(a) $") == std::pair{1, 8});
  CHECK(position("e(w)") == std::pair{1, 3});
  CHECK_THROWS_AS(parse_expression("cyc(a) * cyc(a*)", *j), ParseError);
  CHECK_THROWS_AS(parse_expression("", *j), ParseError);
  CHECK_THROWS_AS(parse_expression("cyc(a)^2", *j), ParseError);
  CHECK_THROWS_AS(parse_expression("h[(a,1),(a*,1)]", *j), InvalidMonomial);
}

TEST_CASE("printed necklace sums re-parse") {
  for (const char* name : {"jordan", "a2"}) {
    auto q = doubled(name);
    std::mt19937_64 rng(4);
    auto all = enumerate_necklaces(*q, 4);
    for (int t = 0; t < 50; ++t) {
      NecklaceSum x;
      for (int k = 0; k < 3; ++k)
        x.add(all[rng() % all.size()], Rational(static_cast<std::int64_t>(rng() % 7) - 3, 1 + rng() % 4));
      CHECK(parse_necklace_sum(to_string(*q, x), *q) == x);
    }
    CHECK(to_string(*q, NecklaceSum()) == "0");
  }
}

TEST_CASE("printed height sums re-parse") {
  for (const char* name : {"jordan", "a2"}) {
    auto q = doubled(name);
    SchedlerAlgebra alg(q, SkeinConvention{});
    auto basis = alg.pbw_basis(4);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
      HeightSum x;
      for (int k = 0; k < 3; ++k) {
        HbarPoly c = HbarPoly(Rational(static_cast<std::int64_t>(rng() % 5) - 2, 1 + rng() % 3)) +
                     HbarPoly::monomial(Rational(static_cast<std::int64_t>(rng() % 3) - 1), 1 + rng() % 2);
        x.add(basis[rng() % basis.size()], c);
      }
      CHECK(parse_height_sum(to_string(*q, x), *q) == x);
    }
  }
}
