#include <doctest.h>

#include <limits>

#include "nqr/error.hpp"
#include "nqr/hbar_poly.hpp"
#include "nqr/lincomb.hpp"
#include "nqr/rational.hpp"

using nqr::HbarPoly;
using nqr::Rational;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 2).str() == "-7/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational overflow is reported, never wrapped") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), nqr::ArithmeticOverflow);
  CHECK_THROWS_AS(big * Rational(2), nqr::ArithmeticOverflow);
  Rational near(std::numeric_limits<std::int64_t>::max() - 1);
  CHECK(near + Rational(1) == big);
}

TEST_CASE("hbar polynomials") {
  HbarPoly h = HbarPoly::hbar();
  HbarPoly p = HbarPoly(1) + h;
  CHECK((p * p).coefficients() == std::vector<Rational>{1, 2, 1});
  CHECK((p - p).is_zero());
  CHECK((p - 1).degree() == 1);
  CHECK(HbarPoly().degree() == -1);
  CHECK((h * h).valuation() == 2);
  CHECK((h * p).divided_by_hbar() == p);
  CHECK_THROWS(p.divided_by_hbar());
  CHECK((p * p).truncated(1) == HbarPoly(1) + HbarPoly::monomial(2, 1));
  CHECK(p.shifted(2) == HbarPoly::hbar(2) + HbarPoly::hbar(3));
  CHECK(h.str() == "hbar");
  CHECK(HbarPoly::monomial(Rational(-2), 3).str() == "-2*hbar^3");
  CHECK(p.str() == "(1 + hbar)");
  CHECK(HbarPoly(Rational(3, 2)).str() == "3/2");
}

TEST_CASE("linear combinations drop zeros and check tags") {
  nqr::LinComb<int, Rational> a(1, Rational(2), 7);
  nqr::LinComb<int, Rational> b(1, Rational(-2), 7);
  CHECK((a + b).is_zero());
  a.add(2, Rational(1));
  CHECK(a.size() == 2);
  CHECK(a.coeff(3).is_zero());
  nqr::LinComb<int, Rational> other(1, Rational(1), 8);
  CHECK_THROWS_AS(a + other, nqr::QuiverMismatch);
  nqr::LinComb<int, Rational> neutral(1, Rational(1));
  CHECK_NOTHROW(a + neutral);
}
