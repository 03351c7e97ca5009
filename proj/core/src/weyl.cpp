#include "nqr/weyl.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "nqr/error.hpp"

namespace nqr {

CoordSystem::CoordSystem(std::shared_ptr<const Quiver> q, DimVector d)
    : quiver_(std::move(q)), dim_(std::move(d)) {
  if (!quiver_->is_doubled()) throw QuiverError("coordinate systems need a doubled quiver");
  check_dimension(*quiver_, dim_);
  for (ArrowId a : quiver_->original_arrows()) {
    offset_.push_back(vars_.size());
    for (int i = 0; i < rows(a); ++i)
      for (int j = 0; j < cols(a); ++j) vars_.push_back(Var{a, i, j});
  }
  if (vars_.size() > 4096) throw ResourceLimit("too many coordinate variables");
  std::uint64_t h = quiver_->fingerprint();
  for (int x : dim_.d) h = (h ^ static_cast<std::uint64_t>(x + 1)) * 0x100000001b3ull;
  tag_ = h == 0 ? 1 : h;
}

std::size_t CoordSystem::var_index(ArrowId a, int i, int j) const {
  if (quiver_->is_star(a)) throw QuiverError("coordinates are indexed by arrows of Q");
  if (i < 0 || j < 0 || i >= rows(a) || j >= cols(a))
    throw DimensionMismatch(fmt::format("index ({},{}) outside the {}x{} block of '{}'", i + 1, j + 1,
                                        rows(a), cols(a), quiver_->arrow(a).name));
  return offset_[quiver_->original_index(a)] + static_cast<std::size_t>(i * cols(a) + j);
}

CoordSystem::Generator CoordSystem::entry(ArrowId a, int i, int j) const {
  if (!quiver_->is_star(a)) return Generator{static_cast<std::uint32_t>(var_index(a, i, j)), false};
  return Generator{static_cast<std::uint32_t>(var_index(quiver_->star(a), j, i)), true};
}

int PhaseMonomial::degree() const noexcept {
  int d = 0;
  for (char c : e_) d += static_cast<unsigned char>(c);
  return d;
}

void PhaseMonomial::bump(std::size_t i, int k) {
  int v = static_cast<unsigned char>(e_.at(i)) + k;
  if (v < 0 || v > 255) throw ArithmeticOverflow("exponent out of range");
  e_[i] = static_cast<char>(v);
}

bool operator<(const PhaseMonomial& a, const PhaseMonomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  // larger exponents on earlier variables first
  return a.e_ > b.e_;
}

WeylSum weyl_constant(const CoordSystem& cs, const HbarPoly& c) {
  return WeylSum(PhaseMonomial(cs.variable_count()), c, cs.tag());
}

WeylSum weyl_generator(const CoordSystem& cs, ArrowId a, int i, int j) {
  auto g = cs.entry(a, i, j);
  PhaseMonomial m(cs.variable_count());
  if (g.derivative) m.add_d(g.var, 1);
  else m.add_x(g.var, 1);
  return WeylSum(m, HbarPoly(1), cs.tag());
}

PolySum poly_constant(const CoordSystem& cs, const Rational& c) {
  return PolySum(PhaseMonomial(cs.variable_count()), c, cs.tag());
}

PolySum poly_generator(const CoordSystem& cs, ArrowId a, int i, int j) {
  return phi(weyl_generator(cs, a, i, j));
}

namespace {

template <class S>
void check_same(const S& x, const S& y) {
  if (x.tag() != 0 && y.tag() != 0 && x.tag() != y.tag())
    throw DimensionMismatch("operands live on different representation spaces");
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

// x^a D^b * x^c D^d = sum_k hbar^|k| prod_v C(b_v,k_v) C(c_v,k_v) k_v! x^{a+c-k} D^{b+d-k}
void multiply_monomials(const PhaseMonomial& l, const PhaseMonomial& r, const HbarPoly& coeff,
                        WeylSum& out) {
  const std::size_t n = l.nvars();
  if (r.nvars() != n) throw DimensionMismatch("monomials over different variable sets");
  PhaseMonomial base(n);
  std::vector<std::size_t> shared;
  for (std::size_t v = 0; v < n; ++v) {
    base.add_x(v, l.x(v) + r.x(v));
    base.add_d(v, l.d(v) + r.d(v));
    if (l.d(v) > 0 && r.x(v) > 0) shared.push_back(v);
  }
  auto rec = [&](auto&& self, std::size_t idx, PhaseMonomial& m, Rational c, int hpow) -> void {
    if (idx == shared.size()) {
      HbarPoly t = coeff.shifted(hpow);
      t *= c;
      out.add(m, t);
      return;
    }
    std::size_t v = shared[idx];
    int b = l.d(v);
    int g = r.x(v);
    for (int k = 0; k <= std::min(b, g); ++k) {
      Rational f = c * Rational(checked_mul(checked_mul(binom(b, k), binom(g, k)), factorial(k)));
      m.add_x(v, -k);
      m.add_d(v, -k);
      self(self, idx + 1, m, f, hpow + k);
      m.add_x(v, k);
      m.add_d(v, k);
    }
  };
  rec(rec, 0, base, Rational(1), 0);
}

}  // namespace

WeylSum weyl_mul(const WeylSum& x, const WeylSum& y) {
  check_same(x, y);
  WeylSum out;
  out.with_tag(x.tag() ? x.tag() : y.tag());
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) multiply_monomials(mx, my, cx * cy, out);
  return out;
}

WeylSum weyl_commutator(const WeylSum& x, const WeylSum& y) { return weyl_mul(x, y) - weyl_mul(y, x); }

PolySum poly_mul(const PolySum& x, const PolySum& y) {
  check_same(x, y);
  PolySum out;
  out.with_tag(x.tag() ? x.tag() : y.tag());
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      if (mx.nvars() != my.nvars()) throw DimensionMismatch("monomials over different variable sets");
      PhaseMonomial m = mx;
      for (std::size_t v = 0; v < m.nvars(); ++v) {
        m.add_x(v, my.x(v));
        m.add_d(v, my.d(v));
      }
      out.add(m, cx * cy);
    }
  return out;
}

PolySum phi(const WeylSum& x) {
  PolySum out;
  out.with_tag(x.tag());
  for (const auto& [m, c] : x) out.add(m, c.at_zero());
  return out;
}

WeylSum normal_ordered(const PolySum& x) {
  WeylSum out;
  out.with_tag(x.tag());
  for (const auto& [m, c] : x) out.add(m, HbarPoly(c));
  return out;
}

PolySum poisson(const PolySum& x, const PolySum& y) {
  WeylSum c = weyl_commutator(normal_ordered(x), normal_ordered(y));
  WeylSum d;
  d.with_tag(c.tag());
  for (const auto& [m, k] : c) d.add(m, k.divided_by_hbar());
  return phi(d);
}

int weyl_weight(const WeylSum& x) {
  int w = -1;
  for (const auto& [m, c] : x) w = std::max(w, m.degree() + 2 * c.degree());
  return w;
}

std::vector<GlBasisElement> gl_basis(const CoordSystem& cs) {
  std::vector<GlBasisElement> out;
  for (VertexId k = 0; k < cs.quiver().vertex_count(); ++k)
    for (int p = 0; p < cs.dim()[k]; ++p)
      for (int q = 0; q < cs.dim()[k]; ++q) out.push_back(GlBasisElement{k, p, q});
  return out;
}

void check_gl(const CoordSystem& cs, const GlBasisElement& xi) {
  if (xi.vertex >= cs.quiver().vertex_count() || xi.p < 0 || xi.q < 0 || xi.p >= cs.dim()[xi.vertex] ||
      xi.q >= cs.dim()[xi.vertex])
    throw DimensionMismatch("gl basis element out of range");
}

WeylSum tau(const CoordSystem& cs, const GlBasisElement& xi) {
  check_gl(cs, xi);
  const Quiver& q = cs.quiver();
  WeylSum out;
  out.with_tag(cs.tag());
  const int k = static_cast<int>(xi.vertex);
  for (ArrowId a : q.original_arrows()) {
    if (static_cast<int>(q.target(a)) == k)
      for (int l = 0; l < cs.rows(a); ++l) {
        PhaseMonomial m(cs.variable_count());
        m.add_x(cs.var_index(a, l, xi.q), 1);
        m.add_d(cs.var_index(a, l, xi.p), 1);
        out.add(m, HbarPoly(1));
      }
    if (static_cast<int>(q.source(a)) == k)
      for (int l = 0; l < cs.cols(a); ++l) {
        PhaseMonomial m(cs.variable_count());
        m.add_x(cs.var_index(a, xi.p, l), 1);
        m.add_d(cs.var_index(a, xi.q, l), 1);
        out.add(m, HbarPoly(-1));
      }
  }
  return out;
}

std::vector<std::pair<GlBasisElement, Rational>> gl_bracket(const GlBasisElement& xi,
                                                            const GlBasisElement& eta) {
  std::vector<std::pair<GlBasisElement, Rational>> out;
  if (xi.vertex != eta.vertex) return out;
  // e_pq = E_qp: [E_qp, E_sr] = d_ps E_qr - d_rq E_sp
  if (xi.p == eta.q) out.emplace_back(GlBasisElement{xi.vertex, eta.p, xi.q}, Rational(1));
  if (eta.p == xi.q) out.emplace_back(GlBasisElement{xi.vertex, xi.p, eta.q}, Rational(-1));
  return out;
}

Character Character::operator+(const Character& o) const {
  if (coeff.size() != o.coeff.size()) throw DimensionMismatch("characters of different groups");
  Character r = *this;
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
  return r;
}

std::string Character::str(const Quiver& q) const {
  std::string out;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (!out.empty()) out += " + ";
    out += fmt::format("{}*tr_{}", coeff[k].str(), q.vertex_name(static_cast<VertexId>(k)));
  }
  return out.empty() ? "0" : out;
}

Character chi0(const CoordSystem& cs) {
  const Quiver& q = cs.quiver();
  Character c{std::vector<Rational>(q.vertex_count(), Rational(0))};
  for (ArrowId a : q.original_arrows()) c.coeff[q.target(a)] -= Rational(cs.dim()[q.source(a)]);
  return c;
}

Character trace_character(const CoordSystem& cs, const Rational& c) {
  return Character{std::vector<Rational>(cs.quiver().vertex_count(), c)};
}

PolySum classical_comoment(const CoordSystem& cs, const GlBasisElement& xi) {
  check_gl(cs, xi);
  const Quiver& q = cs.quiver();
  PolySum out;
  out.with_tag(cs.tag());
  const int k = static_cast<int>(xi.vertex);
  for (ArrowId a : q.original_arrows()) {
    // ((a)(a*))_pq at s(a) = k
    if (static_cast<int>(q.source(a)) == k)
      for (int l = 0; l < cs.cols(a); ++l) {
        PhaseMonomial m(cs.variable_count());
        m.add_x(cs.var_index(a, xi.p, l), 1);
        m.add_d(cs.var_index(a, xi.q, l), 1);
        out.add(m, Rational(1));
      }
    // -((a*)(a))_pq at t(a) = k
    if (static_cast<int>(q.target(a)) == k)
      for (int l = 0; l < cs.rows(a); ++l) {
        PhaseMonomial m(cs.variable_count());
        m.add_d(cs.var_index(a, l, xi.p), 1);
        m.add_x(cs.var_index(a, l, xi.q), 1);
        out.add(m, Rational(-1));
      }
  }
  return out;
}

std::vector<PhaseMonomial> phase_monomials(const CoordSystem& cs, int maxdeg) {
  const std::size_t n = cs.variable_count();
  std::vector<PhaseMonomial> out;
  PhaseMonomial m(n);
  auto rec = [&](auto&& self, std::size_t slot, int budget) -> void {
    if (slot == 2 * n) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      if (slot < n) m.add_x(slot, e);
      else m.add_d(slot - n, e);
      self(self, slot + 1, budget - e);
      if (slot < n) m.add_x(slot, -e);
      else m.add_d(slot - n, -e);
    }
  };
  if (maxdeg >= 0) rec(rec, 0, maxdeg);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylSum> quantum_reduction_span(const CoordSystem& cs, const Character& chi, int maxdeg) {
  std::vector<WeylSum> out;
  if (maxdeg < 2) return out;
  auto monomials = phase_monomials(cs, maxdeg - 2);
  if (monomials.size() * gl_basis(cs).size() > 2000000) throw ResourceLimit("reduction span too large");
  for (const auto& xi : gl_basis(cs)) {
    WeylSum g = tau(cs, xi) - weyl_constant(cs, HbarPoly::monomial(chi(xi), 1));
    for (const auto& m : monomials)
      for (int j = 0; m.degree() + 2 * j + 2 <= maxdeg; ++j) {
        WeylSum lhs(m, HbarPoly::hbar(j), cs.tag());
        WeylSum e = weyl_mul(lhs, g);
        if (!e.is_zero()) out.push_back(std::move(e));
      }
  }
  return out;
}

std::vector<PolySum> classical_reduction_span(const CoordSystem& cs, int maxdeg) {
  std::vector<PolySum> out;
  if (maxdeg < 2) return out;
  auto monomials = phase_monomials(cs, maxdeg - 2);
  for (const auto& xi : gl_basis(cs)) {
    PolySum g = classical_comoment(cs, xi);
    for (const auto& m : monomials) {
      PolySum e = poly_mul(PolySum(m, Rational(1), cs.tag()), g);
      if (!e.is_zero()) out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace nqr
