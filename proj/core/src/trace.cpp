#include "nqr/trace.hpp"

#include "nqr/error.hpp"

namespace nqr {

TraceContext::TraceContext(std::shared_ptr<const Quiver> q, DimVector d, SkeinConvention c)
    : quiver(q), coords(q, std::move(d)), convention(c) {}

namespace {

// odometer over per-slot ranges; calls f for every assignment
template <class F>
void for_each_index(const std::vector<int>& bounds, F&& f) {
  for (int b : bounds)
    if (b <= 0) return;
  std::vector<int> r(bounds.size(), 0);
  while (true) {
    f(r);
    std::size_t i = 0;
    while (i < r.size()) {
      if (++r[i] < bounds[i]) break;
      r[i] = 0;
      ++i;
    }
    if (i == r.size()) return;
  }
}

struct FlatLetter {
  ArrowId arrow;
  std::size_t next;  // index of the following letter on the same component
};

std::vector<FlatLetter> flatten(const HeightMonomial& m, std::vector<std::size_t>& by_height) {
  std::vector<FlatLetter> out;
  by_height.assign(m.letter_count(), 0);
  for (const auto& c : m.components()) {
    std::size_t start = out.size();
    for (std::size_t p = 0; p < c.size(); ++p) {
      out.push_back(FlatLetter{c[p].arrow, start + (p + 1) % c.size()});
      by_height[c[p].height] = start + p;
    }
  }
  return out;
}

std::int64_t idempotent_factor(const TraceContext& ctx, const HeightMonomial& m) {
  std::int64_t f = 1;
  for (VertexId v : m.idempotents()) f = checked_mul(f, ctx.coords.dim()[v]);
  return f;
}

}  // namespace

PolySum classical_trace(const TraceContext& ctx, const Necklace& n) {
  const CoordSystem& cs = ctx.coords;
  PolySum out;
  out.with_tag(cs.tag());
  if (n.is_idempotent()) {
    out.add(PhaseMonomial(cs.variable_count()), Rational(cs.dim()[n.base()]));
    return out;
  }
  const auto& w = n.word();
  std::vector<int> bounds;
  for (ArrowId a : w) bounds.push_back(cs.dim()[ctx.quiver->source(a)]);
  for_each_index(bounds, [&](const std::vector<int>& r) {
    PhaseMonomial m(cs.variable_count());
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto g = cs.entry(w[i], r[i], r[(i + 1) % w.size()]);
      if (g.derivative) m.add_d(g.var, 1);
      else m.add_x(g.var, 1);
    }
    out.add(m, Rational(1));
  });
  return out;
}

PolySum classical_trace(const TraceContext& ctx, const NecklaceSum& x) {
  if (x.tag() != 0 && x.tag() != ctx.quiver->fingerprint())
    throw QuiverMismatch("necklace sum over a different quiver");
  PolySum out;
  out.with_tag(ctx.coords.tag());
  for (const auto& [n, c] : x) {
    PolySum t = classical_trace(ctx, n);
    t *= c;
    out += t;
  }
  return out;
}

void TraceAccumulator::add(const HeightMonomial& m, const Rational& coeff, int shift) {
  if (coeff.is_zero()) return;
  const TraceContext& ctx = *ctx_;
  const CoordSystem& cs = ctx.coords;
  const std::int64_t factor = idempotent_factor(ctx, m);
  if (factor == 0) return;
  const Rational scale = coeff * Rational(factor);
  const std::size_t n = cs.variable_count();

  std::vector<std::size_t> by_height;
  auto letters = flatten(m, by_height);
  if (ctx.convention.order == OperatorOrder::LowerRight) std::reverse(by_height.begin(), by_height.end());
  std::vector<int> bounds;
  for (const auto& l : letters) bounds.push_back(cs.dim()[ctx.quiver->source(l.arrow)]);
  if (letters.empty()) {
    std::string key(2 * n, '\0');
    key.push_back(static_cast<char>(shift));
    acc_[key] += scale;
    return;
  }

  struct Term {
    std::string e;
    int h;
    std::int64_t c;
  };
  std::vector<Term> terms, next;
  for_each_index(bounds, [&](const std::vector<int>& r) {
    terms.assign(1, Term{std::string(2 * n, '\0'), 0, 1});
    for (std::size_t idx : by_height) {
      const auto& l = letters[idx];
      auto g = cs.entry(l.arrow, r[idx], r[l.next]);
      if (g.derivative) {
        for (auto& t : terms) ++t.e[n + g.var];
        continue;
      }
      next.clear();
      for (auto& t : terms) {
        auto dv = static_cast<unsigned char>(t.e[n + g.var]);
        if (dv > 0) {
          Term u = t;
          --u.e[n + g.var];
          ++u.h;
          u.c = checked_mul(u.c, dv);
          next.push_back(std::move(u));
        }
        ++t.e[g.var];
        next.push_back(std::move(t));
      }
      terms.swap(next);
    }
    for (auto& t : terms) {
      t.e.push_back(static_cast<char>(t.h + shift));
      acc_[t.e] += scale * Rational(t.c);
    }
  });
}

bool TraceAccumulator::is_zero() const {
  for (const auto& [k, v] : acc_)
    if (!v.is_zero()) return false;
  return true;
}

WeylSum TraceAccumulator::value() const {
  WeylSum out;
  out.with_tag(ctx_->coords.tag());
  for (const auto& [k, v] : acc_) {
    if (v.is_zero()) continue;
    int h = static_cast<unsigned char>(k.back());
    out.add(PhaseMonomial::from_bytes(k.substr(0, k.size() - 1)), HbarPoly::monomial(v, h));
  }
  return out;
}

WeylSum quantum_trace(const TraceContext& ctx, const HeightMonomial& m) {
  TraceAccumulator acc(ctx);
  acc.add(m, Rational(1));
  return acc.value();
}

WeylSum quantum_trace(const TraceContext& ctx, const HeightSum& x) {
  if (x.tag() != 0 && x.tag() != ctx.quiver->fingerprint())
    throw QuiverMismatch("height sum over a different quiver");
  TraceAccumulator acc(ctx);
  for (const auto& [m, c] : x)
    for (int k = 0; k <= c.degree(); ++k) acc.add(m, c.coeff(k), k);
  return acc.value();
}

std::vector<MomentCheckEntry> quantum_moment_check(const TraceContext& ctx) {
  const CoordSystem& cs = ctx.coords;
  const Quiver& q = *ctx.quiver;
  const bool lower_left = ctx.convention.order == OperatorOrder::LowerLeft;
  auto ordered = [&](const WeylSum& first, const WeylSum& second) {
    return lower_left ? weyl_mul(first, second) : weyl_mul(second, first);
  };
  Character chi = chi0(cs);
  std::vector<MomentCheckEntry> out;
  for (const auto& xi : gl_basis(cs)) {
    const int k = static_cast<int>(xi.vertex);
    WeylSum entry;
    entry.with_tag(cs.tag());
    for (ArrowId a : q.original_arrows()) {
      ArrowId s = q.star(a);
      // (a,1)(a*,2): ([a][a*])_pq
      if (static_cast<int>(q.source(a)) == k)
        for (int l = 0; l < cs.cols(a); ++l)
          entry += ordered(weyl_generator(cs, a, xi.p, l), weyl_generator(cs, s, l, xi.q));
      // -(a*,1)(a,2): -([a*][a])_pq
      if (static_cast<int>(q.target(a)) == k)
        for (int l = 0; l < cs.rows(a); ++l)
          entry -= ordered(weyl_generator(cs, s, xi.p, l), weyl_generator(cs, a, l, xi.q));
    }
    MomentCheckEntry e;
    e.xi = xi;
    e.lhs = -entry;
    e.rhs = tau(cs, xi) - weyl_constant(cs, HbarPoly::monomial(chi(xi), 1));
    e.equal = e.lhs == e.rhs;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace nqr
