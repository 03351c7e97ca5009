#include <doctest.h>

#include "helpers.hpp"
#include "nqr/error.hpp"
#include "nqr/necklace.hpp"
#include "oracle.hpp"

using namespace nqr;
using testing::doubled;
using testing::neck;

namespace {

NecklaceSum parse(const Quiver& q, const std::string& s) { return parse_necklace_sum(s, q); }

NecklaceSum br(const Quiver& q, const NecklaceSum& x, const NecklaceSum& y) { return necklace_bracket(q, x, y); }

NecklaceSum one(const Quiver& q, const Necklace& n) { return NecklaceSum(n, Rational(1), q.fingerprint()); }

}  // namespace

TEST_CASE("normalization picks the first minimal rotation") {
  auto j = doubled("jordan");
  CHECK(neck(*j, "cyc(a*,a)") == neck(*j, "cyc(a,a*)"));
  CHECK(neck(*j, "cyc(a,a*,a)") == neck(*j, "cyc(a,a,a*)"));
  CHECK(neck(*j, "cyc(a*,a,a)").word() == word_from_names(*j, {"a", "a", "a*"}));
  CHECK(canonical_rotation(std::vector<ArrowId>{1, 0, 1, 0}) == 1);

  auto q = doubled("a2");
  Necklace x = neck(*q, "cyc(a*,a)");
  Necklace y = neck(*q, "cyc(a,a*)");
  CHECK(x == y);
  CHECK(x.base() == *q->find_vertex("v1"));
  CHECK_THROWS_AS(normalize(*q, word_from_names(*q, {"a", "a"})), InvalidCycle);
}

TEST_CASE("normalization agrees with brute force over rotations") {
  auto j = doubled("jordan");
  for (const auto& n : enumerate_necklaces(*j, 5)) {
    if (n.is_idempotent()) continue;
    auto w = n.word();
    CHECK(w == oracle::min_rotation(w));
    for (std::size_t r = 0; r < w.size(); ++r) {
      std::vector<ArrowId> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      CHECK(normalize(*j, rot) == n);
    }
  }
}

TEST_CASE("necklace bracket examples") {
  auto j = doubled("jordan");
  CHECK(br(*j, parse(*j, "cyc(a)"), parse(*j, "cyc(a*)")) == parse(*j, "e(v)"));
  CHECK(br(*j, parse(*j, "e(v)"), parse(*j, "cyc(a,a*)")).is_zero());
  CHECK(br(*j, parse(*j, "cyc(a,a)"), parse(*j, "cyc(a*,a*)")) == parse(*j, "4*cyc(a,a*)"));
  auto q = doubled("a2");
  CHECK(br(*q, parse(*q, "cyc(a,a*)"), parse(*q, "cyc(a,a*)")).is_zero());
  CHECK(br(*q, parse(*q, "e(v1)"), parse(*q, "cyc(a,a*)")).is_zero());
}

TEST_CASE("necklace bracket matches the reference double sum") {
  for (const char* name : {"jordan", "a2"}) {
    auto q = doubled(name);
    auto all = enumerate_necklaces(*q, 4);
    for (const auto& x : all)
      for (const auto& y : all) {
        if (x.degree() + y.degree() > 6) continue;
        auto lib = oracle::from_library(necklace_bracket(*q, x, y));
        auto ref = (x.is_idempotent() || y.is_idempotent()) ? oracle::CyclicSum{}
                                                            : oracle::bracket(*q, x.word(), y.word());
        CHECK(lib == ref);
      }
  }
}

TEST_CASE("necklace bracket is antisymmetric, graded and satisfies Jacobi") {
  for (const char* name : {"jordan", "a2"}) {
    auto q = doubled(name);
    auto four = enumerate_necklaces(*q, 4);
    for (const auto& x : four)
      for (const auto& y : four) {
        auto xy = necklace_bracket(*q, x, y);
        CHECK((xy + necklace_bracket(*q, y, x)).is_zero());
        for (const auto& [n, c] : xy) {
          if (x.is_idempotent() || y.is_idempotent()) FAIL("idempotents must bracket to zero");
          CHECK(n.degree() == x.degree() + y.degree() - 2);
        }
      }
    auto three = enumerate_necklaces(*q, 3);
    for (const auto& x : three)
      for (const auto& y : three)
        for (const auto& z : three) {
          auto X = one(*q, x), Y = one(*q, y), Z = one(*q, z);
          auto jac = br(*q, X, br(*q, Y, Z)) + br(*q, Y, br(*q, Z, X)) + br(*q, Z, br(*q, X, Y));
          CHECK(jac.is_zero());
        }
  }
}

TEST_CASE("bracket ignores the rotation used to enter a necklace") {
  auto j = doubled("jordan");
  auto x = parse(*j, "cyc(a,a,a*)");
  auto y = parse(*j, "cyc(a*,a,a*)");
  CHECK(br(*j, x, y) == br(*j, parse(*j, "cyc(a*,a,a)"), parse(*j, "cyc(a*,a*,a)")));
}

TEST_CASE("moment elements") {
  auto j = doubled("jordan");
  auto m = moment(*j);
  Path aa{0, word_from_names(*j, {"a", "a*"})};
  Path bb{0, word_from_names(*j, {"a*", "a"})};
  CHECK(m.element.size() == 2);
  CHECK(m.element.coeff(aa) == Rational(1));
  CHECK(m.element.coeff(bb) == Rational(-1));
  std::vector<Rational> lambda{Rational(1)};
  auto ml = moment(*j, lambda);
  CHECK(ml.element.size() == 3);
  CHECK(ml.element.coeff(Path{0, {}}) == Rational(-1));
  CHECK_THROWS(moment(*j, std::vector<Rational>{1, 2}));

  auto q = doubled("a2");
  auto w = moment(*q);
  CHECK(w.element.coeff(Path{*q->find_vertex("v1"), word_from_names(*q, {"a", "a*"})}) == Rational(1));
  CHECK(w.element.coeff(Path{*q->find_vertex("v2"), word_from_names(*q, {"a*", "a"})}) == Rational(-1));
}

TEST_CASE("cyclified ideal spans") {
  auto j = doubled("jordan");
  CHECK(cyclified_ideal_span(*j, moment(*j), 3).empty());
  auto four = cyclified_ideal_span(*j, moment(*j), 4);
  REQUIRE(four.size() == 1);
  ClassicalReducer red(*j, four, 4);
  CHECK(red.contains(parse(*j, "cyc(a,a*,a,a*) - cyc(a,a,a*,a*)")));
  CHECK_FALSE(red.contains(parse(*j, "cyc(a,a*,a,a*)")));

  auto q = doubled("a2");
  auto two = cyclified_ideal_span(*q, moment(*q), 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == parse(*q, "cyc(a,a*)"));
  std::vector<Rational> lambda{Rational(1), Rational(0)};
  auto deformed = cyclified_ideal_span(*q, moment(*q, lambda), 2);
  CHECK(deformed.size() == 2);
  CHECK_THROWS_AS(cyclified_ideal_span(*j, moment(*j), 1), DegreeOverflow);
}

TEST_CASE("classical reduction") {
  auto j = doubled("jordan");
  auto span = cyclified_ideal_span(*j, moment(*j), 4);
  auto x = parse(*j, "cyc(a,a*,a,a*)");
  auto y = parse(*j, "cyc(a,a,a*,a*)");
  CHECK(reduce_classical(*j, x, span, 4) == reduce_classical(*j, y, span, 4));
  CHECK(reduce_classical(*j, x - y, span, 4).is_zero());
  CHECK(reduce_classical(*j, parse(*j, "cyc(a)"), span, 4) == parse(*j, "cyc(a)"));
  auto r = reduce_classical(*j, x, span, 4);
  CHECK(reduce_classical(*j, r, span, 4) == r);
  CHECK_THROWS_AS(reduce_classical(*j, parse(*j, "cyc(a,a,a,a,a)"), span, 4), DegreeOverflow);
}

TEST_CASE("the cyclified ideal is stable under brackets") {
  for (const char* name : {"jordan", "a2"}) {
    auto q = doubled(name);
    auto gens = cyclified_ideal_span(*q, moment(*q), 4);
    ClassicalReducer big(*q, cyclified_ideal_span(*q, moment(*q), 6), 6);
    for (const auto& x : enumerate_necklaces(*q, 2))
      for (const auto& g : gens) CHECK(big.contains(necklace_bracket(*q, one(*q, x), g)));
  }
}

TEST_CASE("complement basis has the expected size") {
  auto j = doubled("jordan");
  auto span = cyclified_ideal_span(*j, moment(*j), 4);
  ClassicalReducer red(*j, span, 4);
  CHECK(red.rank() == 1);
  CHECK(red.complement_basis().size() == enumerate_necklaces(*j, 4).size() - 1);
}
