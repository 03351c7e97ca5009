#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "nqr/hbar_poly.hpp"
#include "nqr/lincomb.hpp"
#include "nqr/necklace.hpp"
#include "nqr/quiver.hpp"

namespace nqr {

struct HeightLetter {
  ArrowId arrow = 0;
  std::uint32_t height = 0;
  friend auto operator<=>(const HeightLetter&, const HeightLetter&) = default;
};

// Product of height-labelled cyclic components and vertex idempotents.
// Canonical form: heights relabelled to 0..N-1 preserving order, each
// component rotated to start at its lowest height, components sorted by
// that height, idempotents sorted. Heights print 1-based.
class HeightMonomial {
 public:
  using Component = std::vector<HeightLetter>;

  HeightMonomial() = default;
  // validates cycles and distinct heights
  static HeightMonomial make(const Quiver& q, std::vector<Component> components,
                             std::vector<VertexId> idempotents = {});
  // canonicalizes only
  static HeightMonomial make_unchecked(std::vector<Component> components,
                                       std::vector<VertexId> idempotents = {});

  const std::vector<Component>& components() const noexcept { return components_; }
  const std::vector<VertexId>& idempotents() const noexcept { return idempotents_; }
  std::size_t letter_count() const noexcept { return letters_; }
  std::size_t pbw_weight() const noexcept { return letters_ + idempotents_.size(); }
  bool is_unit() const noexcept { return components_.empty() && idempotents_.empty(); }

  // heights of b shifted above those of a
  static HeightMonomial stack(const HeightMonomial& a, const HeightMonomial& b);

  friend auto operator<=>(const HeightMonomial&, const HeightMonomial&) = default;
  friend bool operator==(const HeightMonomial&, const HeightMonomial&) = default;

 private:
  void canonicalize();
  std::vector<Component> components_;
  std::vector<VertexId> idempotents_;
  std::size_t letters_ = 0;
};

struct HeightMonomialHash {
  std::size_t operator()(const HeightMonomial& m) const noexcept;
};

using HeightSum = LinComb<HeightMonomial, HbarPoly>;

// Symmetric-algebra monomial: sorted multiset of necklaces.
using SymMonomial = std::vector<Necklace>;
using SymSum = LinComb<SymMonomial, HbarPoly>;

SymMonomial forget_heights(const Quiver& q, const HeightMonomial& m);
SymSum forget_heights(const Quiver& q, const HeightSum& x);

enum class OperatorOrder { LowerLeft, LowerRight };

// Free parameters of the skein relations and of the quantum trace:
//   X = X' + sign * hbar^k * {l,u} * X''
// for the transposition of adjacent heights carrying letters l (lower) and
// u (upper); k is inter_hbar_power when l and u lie on different
// components and intra_hbar_power otherwise.
struct SkeinConvention {
  int inter_hbar_power = 1;
  int intra_hbar_power = 1;
  int sign = -1;
  OperatorOrder order = OperatorOrder::LowerLeft;

  std::string str() const;
  static std::vector<SkeinConvention> all_settings();
  friend bool operator==(const SkeinConvention&, const SkeinConvention&) = default;
};

// The quantized necklace algebra of a doubled quiver under a fixed
// convention. Thread-safe; normal forms of monomials are memoized.
class SchedlerAlgebra {
 public:
  SchedlerAlgebra(std::shared_ptr<const Quiver> q, SkeinConvention c);

  const Quiver& quiver() const noexcept { return *quiver_; }
  std::shared_ptr<const Quiver> quiver_ptr() const noexcept { return quiver_; }
  const SkeinConvention& convention() const noexcept { return convention_; }
  std::uint64_t tag() const noexcept { return tag_; }

  HeightSum element(const HeightMonomial& m, HbarPoly c = HbarPoly(1)) const;
  HeightSum unit() const { return element(HeightMonomial()); }

  // canonical lift of a sorted multiset of necklaces
  HeightMonomial pbw_monomial(const SymMonomial& multiset) const;
  bool is_pbw_normal(const HeightMonomial& m) const;

  HeightSum lift(const Necklace& n) const;
  HeightSum lift(const NecklaceSum& x) const;

  struct SkeinStep {
    HeightMonomial swapped;                     // X'
    std::optional<HeightMonomial> contraction;  // X''
    HbarPoly coefficient;                       // X = X' + coefficient * X''
    bool intra = false;
  };
  // transposition of heights h and h+1 (0-based)
  SkeinStep skein_step(const HeightMonomial& m, std::size_t h) const;

  HeightSum rewrite_to_pbw(const HeightMonomial& m) const;
  // an independent randomized strategy (uncached), for confluence checks
  HeightSum rewrite_to_pbw(const HeightMonomial& m, std::mt19937_64& rng) const;
  HeightSum normal_form(const HeightSum& x) const;

  HeightSum star(const HeightSum& x, const HeightSum& y) const;
  HeightSum commutator(const HeightSum& x, const HeightSum& y) const;

  HeightSum quantum_moment() const;
  std::vector<HeightMonomial> pbw_basis(int maxdeg) const;
  std::vector<HeightSum> quantum_ideal_span(int maxdeg, int hbar_truncation = 4) const;

  std::size_t cache_size() const;

 private:
  HeightSum rewrite_impl(const HeightMonomial& m, std::mt19937_64* rng) const;

  std::shared_ptr<const Quiver> quiver_;
  SkeinConvention convention_;
  std::uint64_t tag_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<HeightMonomial, HeightSum, HeightMonomialHash> cache_;
};

// heights assigned consecutively along the sorted multiset, each necklace
// read from its canonical first letter
HeightMonomial lift_monomial(const SymMonomial& multiset);

// sorted multisets of necklaces with total pbw weight <= maxdeg
std::vector<SymMonomial> symmetric_monomials(const Quiver& q, int maxdeg);

// letters + idempotents of the heaviest term
int max_pbw_weight(const HeightSum& x);

}  // namespace nqr
