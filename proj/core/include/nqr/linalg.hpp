#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nqr/rational.hpp"

namespace nqr {

using BigRational = mpq_class;

BigRational to_big(const Rational& r);
// throws ArithmeticOverflow if it does not fit
Rational from_big(const BigRational& r);

// Sparse vector with strictly increasing indices and nonzero entries.
struct SparseVector {
  std::vector<std::pair<std::size_t, BigRational>> entries;

  bool is_zero() const noexcept { return entries.empty(); }
  void add(std::size_t index, const BigRational& value);  // any order; call normalize after
  void normalize();  // sort, merge, drop zeros
  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

SparseVector axpy(const SparseVector& y, const BigRational& a, const SparseVector& x);

// Incremental echelon form over Q with pivots at the largest index of each
// row. Optionally records each row as a combination of the inserted
// generators so that memberships come with certificates.
class EchelonBasis {
 public:
  explicit EchelonBasis(bool track_certificates = false);

  // returns true if v was independent of the current rows
  bool insert(const SparseVector& v);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t generator_count() const noexcept { return generators_; }
  bool is_pivot(std::size_t index) const { return rows_.count(index) != 0; }
  std::vector<std::size_t> pivots() const;

  struct Reduction {
    SparseVector residual;
    // coefficients c_g with query - residual = sum_g c_g * generator_g
    std::vector<std::pair<std::size_t, BigRational>> certificate;
  };
  Reduction reduce(const SparseVector& q) const;
  bool contains(const SparseVector& q) const { return reduce(q).residual.is_zero(); }

 private:
  struct Row {
    std::map<std::size_t, BigRational> v;      // leading entry (largest index) is 1
    std::map<std::size_t, BigRational> combo;  // over generator ids
  };
  bool track_;
  std::size_t generators_ = 0;
  std::map<std::size_t, Row> rows_;  // keyed by pivot
};

// Maps arbitrary keys to dense coordinates in order of first appearance.
template <class K, class Hash = std::hash<K>>
class KeyIndex {
 public:
  std::size_t index(const K& k) {
    auto [it, inserted] = map_.try_emplace(k, keys_.size());
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  std::optional<std::size_t> find(const K& k) const {
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  const K& key(std::size_t i) const { return keys_.at(i); }
  std::size_t size() const noexcept { return keys_.size(); }

 private:
  std::unordered_map<K, std::size_t, Hash> map_;
  std::vector<K> keys_;
};

struct IdealMembershipProblem {
  std::size_t ambient_dimension = 0;
  std::vector<SparseVector> spanning;
  SparseVector query;
};

struct MembershipResult {
  bool member = false;
  std::vector<BigRational> certificate;  // one coefficient per spanning vector
  SparseVector residual;                 // zero iff member

  // recombines the certificate and checks query = sum c_i s_i + residual
  bool verify(const IdealMembershipProblem& p) const;
};

MembershipResult solve_membership(const IdealMembershipProblem& p);

}  // namespace nqr
