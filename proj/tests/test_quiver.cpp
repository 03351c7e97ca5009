#include <doctest.h>

#include "helpers.hpp"
#include "nqr/error.hpp"
#include "nqr/quiver.hpp"

using namespace nqr;

TEST_CASE("doubling the Jordan and A2 quivers") {
  Quiver j = jordan_quiver().doubled();
  REQUIRE(j.arrow_count() == 2);
  ArrowId a = *j.find_arrow("a");
  ArrowId as = *j.find_arrow("a*");
  CHECK(j.star(a) == as);
  CHECK(j.star(as) == a);
  CHECK(j.source(as) == j.target(a));
  CHECK(j.is_star(as));
  CHECK_FALSE(j.is_star(a));

  Quiver q = a2_quiver().doubled();
  ArrowId b = *q.find_arrow("a");
  ArrowId bs = *q.find_arrow("a*");
  CHECK(q.source(b) == *q.find_vertex("v1"));
  CHECK(q.target(b) == *q.find_vertex("v2"));
  CHECK(q.source(bs) == *q.find_vertex("v2"));
  CHECK(q.target(bs) == *q.find_vertex("v1"));
  CHECK(q.pairing(b, bs) == 1);
  CHECK(q.pairing(bs, b) == -1);
  CHECK(q.pairing(b, b) == 0);
}

TEST_CASE("doubling errors") {
  CHECK_THROWS_AS(Quiver("dup", {"v"}, {{"a", 0, 0}, {"a", 0, 0}}).doubled(), QuiverError);
  CHECK_THROWS_AS(Quiver("star", {"v"}, {{"a*", 0, 0}}).doubled(), QuiverError);
  CHECK_THROWS_AS(jordan_quiver().doubled().doubled(), QuiverError);
  CHECK_THROWS_AS(Quiver("bad", {"v"}, {{"a", 0, 3}}), QuiverError);
}

TEST_CASE("star is an involution on every arrow of a doubled quiver") {
  Quiver q("two", {"u", "w"}, {{"a", 0, 1}, {"b", 1, 1}, {"c", 1, 0}});
  Quiver d = q.doubled();
  CHECK(d.arrow_count() == 6);
  for (ArrowId x = 0; x < d.arrow_count(); ++x) {
    CHECK(d.star(d.star(x)) == x);
    CHECK(d.source(d.star(x)) == d.target(x));
  }
  CHECK(d.undoubled() == q);
}

TEST_CASE("flatness function") {
  CHECK(p_value(jordan_quiver(), DimVector({1})) == 1);
  CHECK(p_value(jordan_quiver(), DimVector({3})) == 1);
  CHECK(p_value(a2_quiver(), DimVector({1, 1})) == 0);
  CHECK(p_value(a2_quiver(), DimVector({2, 1})) == -2);
  CHECK_THROWS_AS(p_value(a2_quiver(), DimVector({1})), DimensionMismatch);
}

TEST_CASE("cycle validation") {
  Quiver j = jordan_quiver().doubled();
  Quiver q = a2_quiver().doubled();
  auto w = [](const Quiver& qq, std::vector<std::string> names) { return word_from_names(qq, names); };
  CHECK(validate_cycle(j, w(j, {"a", "a*"})) == *j.find_vertex("v"));
  CHECK(validate_cycle(q, w(q, {"a", "a*"})) == *q.find_vertex("v1"));
  CHECK(validate_cycle(q, w(q, {"a*", "a"})) == *q.find_vertex("v2"));
  CHECK_THROWS_AS(validate_cycle(q, w(q, {"a", "a"})), InvalidCycle);
  CHECK_THROWS_AS(validate_cycle(q, w(q, {"a"})), InvalidCycle);
  CHECK_THROWS(word_from_names(q, {"b"}));
}

TEST_CASE("cycle validity is rotation stable") {
  Quiver d = Quiver("tri", {"x", "y", "z"}, {{"p", 0, 1}, {"r", 1, 2}, {"s", 2, 0}}).doubled();
  std::vector<ArrowId> all;
  for (ArrowId a = 0; a < d.arrow_count(); ++a) all.push_back(a);
  // every word of length 3 over the arrows
  for (ArrowId x : all)
    for (ArrowId y : all)
      for (ArrowId z : all) {
        std::vector<std::vector<ArrowId>> rots{{x, y, z}, {y, z, x}, {z, x, y}};
        int valid = 0;
        for (const auto& r : rots) {
          try {
            validate_cycle(d, r);
            ++valid;
          } catch (const InvalidCycle&) {
          }
        }
        CHECK((valid == 0 || valid == 3));
      }
}

TEST_CASE("dimension vectors") {
  DimVector d = DimVector::parse("2,1");
  CHECK(d.total() == 3);
  CHECK(d.str() == "2,1");
  CHECK(DimVector::parse(d.str()) == d);
  CHECK_THROWS(DimVector::parse("2,-1"));
  CHECK_THROWS(DimVector::parse("x"));
  CHECK_THROWS_AS(check_dimension(jordan_quiver(), d), DimensionMismatch);
}

TEST_CASE("quiver files round-trip") {
  const char* text = R"(# two vertices
[quiver]
name = kronecker
doubled = no

[vertices]
p
r

[arrows]
a = p -> r
b = p -> r
)";
  Quiver q = parse_quiver(text);
  CHECK(q.name() == "kronecker");
  CHECK(q.arrow_count() == 2);
  CHECK(parse_quiver(serialize_quiver(q)) == q);
  Quiver d = q.doubled();
  CHECK(parse_quiver(serialize_quiver(d)) == d);
  CHECK(parse_quiver(serialize_quiver(jordan_quiver())) == jordan_quiver());
}

TEST_CASE("quiver file errors carry positions") {
  try {
    parse_quiver("[quiver]\nname = x\n[arrows]\na = p -> q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS(parse_quiver("[vertices]\nv\n[arrows]\na = v => v\n"));
  CHECK_THROWS(parse_quiver("[nonsense]\n"));
}
