#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "nqr/necklace.hpp"
#include "nqr/schedler.hpp"
#include "nqr/weyl.hpp"

namespace nqr {

struct TraceContext {
  std::shared_ptr<const Quiver> quiver;  // doubled
  CoordSystem coords;
  SkeinConvention convention;

  TraceContext(std::shared_ptr<const Quiver> q, DimVector d, SkeinConvention c);
};

PolySum classical_trace(const TraceContext& ctx, const Necklace& n);
PolySum classical_trace(const TraceContext& ctx, const NecklaceSum& x);

WeylSum quantum_trace(const TraceContext& ctx, const HeightMonomial& m);
WeylSum quantum_trace(const TraceContext& ctx, const HeightSum& x);

// Sparse accumulator for quantum traces keyed by (monomial, hbar power);
// used where many traces are summed and tested for vanishing.
class TraceAccumulator {
 public:
  explicit TraceAccumulator(const TraceContext& ctx) : ctx_(&ctx) {}
  // adds coeff * hbar^shift * Tr^q(m)
  void add(const HeightMonomial& m, const Rational& coeff, int shift = 0);
  bool is_zero() const;
  WeylSum value() const;
  void clear() { acc_.clear(); }

 private:
  const TraceContext* ctx_;
  std::unordered_map<std::string, Rational> acc_;
};

struct MomentCheckEntry {
  GlBasisElement xi;
  bool equal = false;
  WeylSum lhs;  // -tr([w^] xi)
  WeylSum rhs;  // (tau - hbar chi0)(xi)
};

// -tr([w^] xi) assembled by index contraction of the operator matrix of
// the unnormalized moment element, compared with (tau - hbar chi0)(xi)
std::vector<MomentCheckEntry> quantum_moment_check(const TraceContext& ctx);

}  // namespace nqr
