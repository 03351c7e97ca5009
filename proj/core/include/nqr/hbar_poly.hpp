#pragma once

#include <string>
#include <vector>

#include "nqr/rational.hpp"

namespace nqr {

// Element of Q[hbar]; coefficient k multiplies hbar^k.
class HbarPoly {
 public:
  HbarPoly() = default;
  HbarPoly(Rational c);  // NOLINT(google-explicit-constructor)
  HbarPoly(std::int64_t c) : HbarPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static HbarPoly monomial(Rational c, int power);
  static HbarPoly hbar(int power = 1) { return monomial(Rational(1), power); }

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for zero
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  // lowest power with nonzero coefficient, -1 for zero
  int valuation() const noexcept;
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  HbarPoly operator-() const;
  HbarPoly& operator+=(const HbarPoly& o);
  HbarPoly& operator-=(const HbarPoly& o);
  HbarPoly& operator*=(const HbarPoly& o);
  HbarPoly& operator*=(const Rational& r);
  friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
  friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
  friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b);
  friend bool operator==(const HbarPoly&, const HbarPoly&) = default;

  HbarPoly shifted(int k) const;
  // exact division by hbar; throws if the constant term is nonzero
  HbarPoly divided_by_hbar() const;
  Rational at_zero() const { return coeff(0); }
  HbarPoly truncated(int max_power) const;

  // parseable text: "3/2", "hbar", "-2*hbar^3", "(1 + hbar)"
  std::string str() const;
  // true if str() is a single signed term and needs no parentheses
  bool is_single_term() const noexcept;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace nqr
