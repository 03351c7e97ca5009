#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nqr/hbar_poly.hpp"
#include "nqr/lincomb.hpp"
#include "nqr/quiver.hpp"
#include "nqr/rational.hpp"

namespace nqr {

// Coordinates on Rep(Q,d): for each arrow a of Q the matrix [a] has
// d_{s(a)} rows and d_{t(a)} columns with entries x[a][i][j]; the starred
// entry [a*]_{ij} is the derivative D[a][j][i] (or the coordinate
// x[a*][i][j] on the cotangent side).
class CoordSystem {
 public:
  // q must be doubled
  CoordSystem(std::shared_ptr<const Quiver> q, DimVector d);

  const Quiver& quiver() const noexcept { return *quiver_; }
  std::shared_ptr<const Quiver> quiver_ptr() const noexcept { return quiver_; }
  const DimVector& dim() const noexcept { return dim_; }
  std::size_t variable_count() const noexcept { return vars_.size(); }
  std::uint64_t tag() const noexcept { return tag_; }

  struct Var {
    ArrowId arrow;  // original arrow (even id in the doubled quiver)
    int row;
    int col;
  };
  const Var& var(std::size_t v) const { return vars_.at(v); }
  // variable of x[a][i][j] for an original arrow a
  std::size_t var_index(ArrowId a, int i, int j) const;

  int rows(ArrowId a) const { return dim_[quiver_->source(a)]; }
  int cols(ArrowId a) const { return dim_[quiver_->target(a)]; }

  // entry (i,j) of the matrix of an arrow of the doubled quiver:
  // coordinate for original arrows, derivative for starred ones
  struct Generator {
    std::uint32_t var;
    bool derivative;
  };
  Generator entry(ArrowId a, int i, int j) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  DimVector dim_;
  std::vector<Var> vars_;
  std::vector<std::size_t> offset_;  // per original arrow index
  std::uint64_t tag_;
};

// Dense exponent vector: first n entries are coordinate exponents, the
// next n are derivative (or starred-coordinate) exponents.
class PhaseMonomial {
 public:
  PhaseMonomial() = default;
  explicit PhaseMonomial(std::size_t nvars) : e_(2 * nvars, '\0') {}
  static PhaseMonomial from_bytes(std::string bytes) {
    PhaseMonomial m;
    m.e_ = std::move(bytes);
    return m;
  }

  std::size_t nvars() const noexcept { return e_.size() / 2; }
  int x(std::size_t v) const { return static_cast<unsigned char>(e_[v]); }
  int d(std::size_t v) const { return static_cast<unsigned char>(e_[nvars() + v]); }
  void add_x(std::size_t v, int k) { bump(v, k); }
  void add_d(std::size_t v, int k) { bump(nvars() + v, k); }
  int degree() const noexcept;
  bool is_constant() const noexcept { return degree() == 0; }
  const std::string& bytes() const noexcept { return e_; }

  // total degree first, then exponents
  friend bool operator<(const PhaseMonomial& a, const PhaseMonomial& b);
  friend bool operator==(const PhaseMonomial&, const PhaseMonomial&) = default;

 private:
  void bump(std::size_t i, int k);
  std::string e_;
};

// normal-ordered differential operators, coefficients in Q[hbar]
using WeylSum = LinComb<PhaseMonomial, HbarPoly>;
// polynomials on T*Rep(Q,d)
using PolySum = LinComb<PhaseMonomial, Rational>;

WeylSum weyl_constant(const CoordSystem& cs, const HbarPoly& c);
WeylSum weyl_generator(const CoordSystem& cs, ArrowId a, int i, int j);
PolySum poly_constant(const CoordSystem& cs, const Rational& c);
PolySum poly_generator(const CoordSystem& cs, ArrowId a, int i, int j);

WeylSum weyl_mul(const WeylSum& x, const WeylSum& y);
WeylSum weyl_commutator(const WeylSum& x, const WeylSum& y);
PolySum poly_mul(const PolySum& x, const PolySum& y);

// symbol map: hbar = 0, derivatives renamed to starred coordinates
PolySum phi(const WeylSum& x);
// normal-ordered quantization of a polynomial (coordinates left)
WeylSum normal_ordered(const PolySum& x);
// Poisson bracket defined as phi(hbar^{-1} [X, Y]) for normal-ordered lifts
PolySum poisson(const PolySum& x, const PolySum& y);

int weyl_weight(const WeylSum& x);  // max of degree + 2 * hbar power

struct GlBasisElement {
  VertexId vertex = 0;
  int p = 0;
  int q = 0;
  friend auto operator<=>(const GlBasisElement&, const GlBasisElement&) = default;
};

std::vector<GlBasisElement> gl_basis(const CoordSystem& cs);
void check_gl(const CoordSystem& cs, const GlBasisElement& xi);

// infinitesimal conjugation action:
// tau(e^k_pq) = sum_{t(a)=k} sum_l x[a][l][q] D[a][l][p]
//             - sum_{s(a)=k} sum_l x[a][p][l] D[a][q][l]
WeylSum tau(const CoordSystem& cs, const GlBasisElement& xi);

// matrix commutator [xi, eta] in the basis e^k_pq, with e^k_pq acting as
// the elementary matrix E_qp
std::vector<std::pair<GlBasisElement, Rational>> gl_bracket(const GlBasisElement& xi,
                                                            const GlBasisElement& eta);

// A character sum_k c_k tr_k of gl_d, stored as the vector (c_k).
struct Character {
  std::vector<Rational> coeff;
  Rational operator()(const GlBasisElement& xi) const {
    return xi.p == xi.q ? coeff.at(xi.vertex) : Rational(0);
  }
  Character operator+(const Character& o) const;
  std::string str(const Quiver& q) const;
  friend bool operator==(const Character&, const Character&) = default;
};

// chi0 = -sum_k (sum_{t(a)=k} d_{s(a)}) tr_k
Character chi0(const CoordSystem& cs);
Character trace_character(const CoordSystem& cs, const Rational& c);  // c * sum_k tr_k

// tr((w) xi), w = sum_a (a a* - a* a)
PolySum classical_comoment(const CoordSystem& cs, const GlBasisElement& xi);

// all normal-ordered monomials of degree <= maxdeg
std::vector<PhaseMonomial> phase_monomials(const CoordSystem& cs, int maxdeg);

// { hbar^j m * (tau - hbar chi)(xi) : deg m + 2j + 2 <= maxdeg }
std::vector<WeylSum> quantum_reduction_span(const CoordSystem& cs, const Character& chi,
                                            int maxdeg);
// { m * comoment(xi) : deg m + 2 <= maxdeg }
std::vector<PolySum> classical_reduction_span(const CoordSystem& cs, int maxdeg);

}  // namespace nqr
