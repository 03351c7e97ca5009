#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "nqr/error.hpp"

namespace nqr {

// Finite linear combination with no stored zero coefficients.
// The tag identifies the ambient algebra (0 = not yet bound); combining
// elements with different nonzero tags throws QuiverMismatch.
template <class Key, class Coeff>
class LinComb {
 public:
  using key_type = Key;
  using coeff_type = Coeff;
  using map_type = std::map<Key, Coeff>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(Key k, Coeff c = Coeff(1), std::uint64_t tag = 0) : tag_(tag) {
    if (!c.is_zero()) terms_.emplace(std::move(k), std::move(c));
  }

  std::uint64_t tag() const noexcept { return tag_; }
  LinComb& with_tag(std::uint64_t t) {
    tag_ = t;
    return *this;
  }

  void add(const Key& k, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff() : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    merge_tag(o.tag_);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    merge_tag(o.tag_);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  template <class S>
  LinComb& operator*=(const S& s) {
    if (Coeff(s).is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  template <class S>
  friend LinComb operator*(const S& s, LinComb a) {
    return a *= s;
  }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  void merge_tag(std::uint64_t t) {
    if (t == 0 || t == tag_) return;
    if (tag_ == 0) {
      tag_ = t;
      return;
    }
    throw QuiverMismatch("elements belong to different algebras");
  }

 private:
  std::uint64_t tag_ = 0;
  map_type terms_;
};

}  // namespace nqr
