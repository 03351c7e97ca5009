#pragma once

#include <memory>
#include <span>
#include <vector>

#include "nqr/lincomb.hpp"
#include "nqr/quiver.hpp"
#include "nqr/rational.hpp"

namespace nqr {

// A cyclic word in the doubled quiver stored in its canonical rotation
// (lexicographically least by arrow id, first such on ties), or the
// idempotent of a vertex (empty word).
class Necklace {
 public:
  static Necklace idempotent(VertexId v);
  // word must already be a valid cycle
  static Necklace from_canonical(VertexId base, std::vector<ArrowId> word);

  VertexId base() const noexcept { return base_; }
  const std::vector<ArrowId>& word() const noexcept { return word_; }
  std::size_t degree() const noexcept { return word_.size(); }
  bool is_idempotent() const noexcept { return word_.empty(); }
  // idempotents count as one symmetric-algebra factor of weight 1
  std::size_t pbw_weight() const noexcept { return word_.empty() ? 1 : word_.size(); }

  // degree, then word, then base vertex
  friend bool operator<(const Necklace& a, const Necklace& b);
  friend bool operator==(const Necklace&, const Necklace&) = default;

 private:
  VertexId base_ = 0;
  std::vector<ArrowId> word_;
};

// index of the first lexicographically minimal rotation
std::size_t canonical_rotation(std::span<const ArrowId> word);

Necklace normalize(const Quiver& q, std::span<const ArrowId> word);

using NecklaceSum = LinComb<Necklace, Rational>;

NecklaceSum necklace_element(const Quiver& q, std::span<const ArrowId> word, Rational c = 1);
NecklaceSum idempotent_element(const Quiver& q, VertexId v, Rational c = 1);

// bilinear necklace bracket; idempotents bracket to zero
NecklaceSum necklace_bracket(const Quiver& q, const NecklaceSum& x, const NecklaceSum& y);
NecklaceSum necklace_bracket(const Quiver& q, const Necklace& x, const Necklace& y);

// Paths of the doubled quiver, i.e. elements of its path algebra.
struct Path {
  VertexId source = 0;
  std::vector<ArrowId> arrows;  // empty: idempotent at source
  friend auto operator<=>(const Path&, const Path&) = default;
};

using PathSum = LinComb<Path, Rational>;

VertexId path_target(const Quiver& q, const Path& p);
PathSum path_product(const Quiver& q, const PathSum& x, const PathSum& y);
NecklaceSum cyclify(const Quiver& q, const PathSum& x);

// w - lambda, with w = sum_a (a a* - a* a) and lambda = sum_i lambda_i e_i
struct MomentElement {
  std::vector<Rational> lambda;
  PathSum element;
};

MomentElement moment(const Quiver& q, std::span<const Rational> lambda = {});

// closed paths of length <= maxlen, idempotents included
std::vector<Path> closed_paths(const Quiver& q, std::size_t maxlen);
// all necklaces of degree <= maxdeg (idempotents included), sorted
std::vector<Necklace> enumerate_necklaces(const Quiver& q, std::size_t maxdeg);

// linearly independent subset of {(p (w - lambda))_nat : len(p) + 2 <= maxdeg}
std::vector<NecklaceSum> cyclified_ideal_span(const Quiver& q, const MomentElement& m,
                                              int maxdeg);

class EchelonBasis;

// Coset representatives modulo a span of necklace sums. Pivots sit on the
// largest necklace of each echelon row, so representatives only involve
// necklaces that are not pivots.
class ClassicalReducer {
 public:
  ClassicalReducer(const Quiver& q, const std::vector<NecklaceSum>& span, int maxdeg);
  ~ClassicalReducer();
  ClassicalReducer(ClassicalReducer&&) noexcept;
  ClassicalReducer& operator=(ClassicalReducer&&) noexcept;

  NecklaceSum reduce(const NecklaceSum& x) const;
  bool contains(const NecklaceSum& x) const { return reduce(x).is_zero(); }
  // necklaces of degree <= maxdeg that are not pivots: a basis of the quotient
  std::vector<Necklace> complement_basis() const;
  std::size_t rank() const;
  int maxdeg() const noexcept { return maxdeg_; }

 private:
  std::vector<Necklace> necklaces_;
  std::unique_ptr<EchelonBasis> basis_;
  int maxdeg_;
  std::uint64_t tag_;
};

NecklaceSum reduce_classical(const Quiver& q, const NecklaceSum& x,
                             const std::vector<NecklaceSum>& span, int maxdeg);

int max_degree(const NecklaceSum& x);

}  // namespace nqr
