#include "nqr/hbar_poly.hpp"

#include <algorithm>

#include "nqr/error.hpp"

namespace nqr {

HbarPoly::HbarPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(c);
}

HbarPoly HbarPoly::monomial(Rational c, int power) {
  HbarPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

int HbarPoly::valuation() const noexcept {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

Rational HbarPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

void HbarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

HbarPoly HbarPoly::operator-() const {
  HbarPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

HbarPoly& HbarPoly::operator-=(const HbarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
  HbarPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

HbarPoly& HbarPoly::operator*=(const HbarPoly& o) { return *this = *this * o; }

HbarPoly& HbarPoly::operator*=(const Rational& r) {
  if (r.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= r;
  return *this;
}

HbarPoly HbarPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  HbarPoly r;
  if (k > 0) {
    r.c_.assign(static_cast<std::size_t>(k), Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  for (int i = 0; i < -k && static_cast<std::size_t>(i) < c_.size(); ++i)
    if (!c_[static_cast<std::size_t>(i)].is_zero()) throw Error("negative hbar shift of a non-divisible polynomial");
  if (static_cast<std::size_t>(-k) >= c_.size()) return r;
  r.c_.assign(c_.begin() + (-k), c_.end());
  return r;
}

HbarPoly HbarPoly::divided_by_hbar() const {
  if (!coeff(0).is_zero()) throw Error("polynomial is not divisible by hbar");
  return shifted(-1);
}

HbarPoly HbarPoly::truncated(int max_power) const {
  HbarPoly r = *this;
  if (max_power < 0) return HbarPoly();
  if (r.c_.size() > static_cast<std::size_t>(max_power) + 1)
    r.c_.resize(static_cast<std::size_t>(max_power) + 1);
  r.trim();
  return r;
}

bool HbarPoly::is_single_term() const noexcept {
  return std::count_if(c_.begin(), c_.end(), [](const Rational& r) { return !r.is_zero(); }) <= 1;
}

namespace {

std::string term_str(const Rational& c, int k) {
  std::string h = k == 0 ? "" : (k == 1 ? "hbar" : "hbar^" + std::to_string(k));
  if (k == 0) return c.str();
  if (c.is_one()) return h;
  if (c == Rational(-1)) return "-" + h;
  return c.str() + "*" + h;
}

}  // namespace

std::string HbarPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    if (first) {
      out += term_str(c, static_cast<int>(k));
    } else if (c.sign() < 0) {
      out += " - " + term_str(-c, static_cast<int>(k));
    } else {
      out += " + " + term_str(c, static_cast<int>(k));
    }
    first = false;
  }
  return is_single_term() ? out : "(" + out + ")";
}

}  // namespace nqr
