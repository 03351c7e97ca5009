#include "nqr/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "nqr/error.hpp"
#include "nqr/linalg.hpp"
#include "nqr/parse.hpp"

namespace nqr {

namespace {

struct FaceInfo {
  Face face;
  std::string_view id;
  std::string_view statement;
  bool surrogate;
};

const FaceInfo kFaces[] = {
    {Face::Top, "TOP",
     "quantum trace maps the quantum reduction ideal into D(tau - hbar chi0)(gl_d); cosets are preserved",
     false},
    {Face::Bottom, "BOTTOM", "classical trace maps the cyclified moment ideal into the comoment ideal", false},
    {Face::Back, "BACK", "phi(hbar^-1 Tr^q[x^, y^]) = {Tr x, Tr y} on the unreduced algebras", false},
    {Face::Front, "FRONT",
     "the quantization identity holds modulo the reduction ideals, which are stable under the brackets",
     false},
    {Face::Left, "LEFT",
     "PBW monomials in necklaces outside the classical ideal stay independent modulo (quantum ideal + hbar)",
     false},
    {Face::Right, "RIGHT",
     "symbol of (tau - hbar chi0)(xi) equals -+ the classical comoment; chi0 is nonzero on ker tau", true},
};

const FaceInfo& info(Face f) {
  for (const auto& i : kFaces)
    if (i.face == f) return i;
  throw Error("unknown face");
}

FaceRecord start(Face f) {
  FaceRecord r;
  r.id = std::string(info(f).id);
  r.statement = std::string(info(f).statement);
  r.surrogate = info(f).surrogate;
  return r;
}

void finish(FaceRecord& r, const CheckResult& c) {
  r.cases = c.cases;
  r.passed = c.passed;
  r.witness = c.witness;
}

// Weyl sums as sparse vectors over (monomial, hbar power)
class WeylIndex {
 public:
  SparseVector vec(const WeylSum& x) {
    SparseVector v;
    for (const auto& [m, c] : x)
      for (int k = 0; k <= c.degree(); ++k) {
        if (c.coeff(k).is_zero()) continue;
        std::string key = m.bytes();
        key.push_back(static_cast<char>(k));
        v.add(index_.index(key), to_big(c.coeff(k)));
      }
    v.normalize();
    return v;
  }
  SparseVector vec(const PolySum& x) {
    SparseVector v;
    for (const auto& [m, c] : x) v.add(index_.index(m.bytes()), to_big(c));
    v.normalize();
    return v;
  }
  WeylSum weyl(const SparseVector& v, std::uint64_t tag) const {
    WeylSum out;
    out.with_tag(tag);
    for (const auto& [i, c] : v.entries) {
      const std::string& key = index_.key(i);
      out.add(PhaseMonomial::from_bytes(key.substr(0, key.size() - 1)),
              HbarPoly::monomial(from_big(c), static_cast<unsigned char>(key.back())));
    }
    return out;
  }
  PolySum poly(const SparseVector& v, std::uint64_t tag) const {
    PolySum out;
    out.with_tag(tag);
    for (const auto& [i, c] : v.entries) out.add(PhaseMonomial::from_bytes(index_.key(i)), from_big(c));
    return out;
  }

 private:
  KeyIndex<std::string> index_;
};

// span with recombination-checked certificates
class CertifiedSpan {
 public:
  void add(SparseVector v) {
    echelon_.insert(v);
    gens_.push_back(std::move(v));
  }
  // residual after reduction; certificate verified by recombination
  SparseVector residual(const SparseVector& q) const {
    auto r = echelon_.reduce(q);
    SparseVector acc = r.residual;
    for (const auto& [g, c] : r.certificate) acc = axpy(acc, c, gens_.at(g));
    if (!(acc == q)) throw Error("membership certificate failed to recombine");
    return r.residual;
  }
  std::size_t size() const { return gens_.size(); }
  std::size_t rank() const { return echelon_.rank(); }

 private:
  EchelonBasis echelon_{true};
  std::vector<SparseVector> gens_;
};

std::string short_text(std::string s, std::size_t limit = 400) {
  if (s.size() > limit) s = s.substr(0, limit) + " ...";
  return s;
}

}  // namespace

std::string_view face_id(Face f) { return info(f).id; }
std::string_view face_statement(Face f) { return info(f).statement; }

std::optional<Face> parse_face(std::string_view id) {
  for (const auto& i : kFaces) {
    std::string lower(i.id);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (id == i.id || id == lower) return i.face;
  }
  return std::nullopt;
}

const std::vector<Face>& all_faces() {
  static const std::vector<Face> faces{Face::Top, Face::Bottom, Face::Back, Face::Front, Face::Left, Face::Right};
  return faces;
}

std::vector<HeightMonomial> letter_monomials(const Quiver& q, std::size_t n) {
  std::vector<HeightMonomial> out;
  if (n == 0) return out;
  std::vector<std::size_t> succ(n);
  std::iota(succ.begin(), succ.end(), 0);
  std::vector<ArrowId> arrows(n);
  do {
    auto rec = [&](auto&& self, std::size_t h) -> void {
      if (h == n) {
        // components follow the cycles of succ
        std::vector<bool> seen(n, false);
        std::vector<HeightMonomial::Component> comps;
        for (std::size_t s = 0; s < n; ++s) {
          if (seen[s]) continue;
          HeightMonomial::Component c;
          for (std::size_t k = s; !seen[k]; k = succ[k]) {
            seen[k] = true;
            c.push_back(HeightLetter{arrows[k], static_cast<std::uint32_t>(k)});
          }
          comps.push_back(std::move(c));
        }
        out.push_back(HeightMonomial::make_unchecked(std::move(comps)));
        return;
      }
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        arrows[h] = a;
        bool ok = true;
        for (std::size_t k = 0; k < h && ok; ++k) {
          if (succ[k] == h) ok = q.target(arrows[k]) == q.source(a);
          if (succ[h] == k) ok = ok && q.target(a) == q.source(arrows[k]);
        }
        if (ok && succ[h] == h) ok = q.target(a) == q.source(a);
        if (ok) self(self, h + 1);
      }
    };
    rec(rec, 0);
  } while (std::next_permutation(succ.begin(), succ.end()));
  return out;
}

CheckResult check_skein_annihilation(const SchedlerAlgebra& alg, const TraceContext& ctx,
                                     std::size_t max_letters, bool stop_at_first) {
  CheckResult res;
  TraceAccumulator acc(ctx);
  const Quiver& q = alg.quiver();
  for (std::size_t n = 2; n <= max_letters; ++n) {
    for (const auto& m : letter_monomials(q, n)) {
      for (std::size_t h = 0; h + 1 < n; ++h) {
        auto step = alg.skein_step(m, h);
        acc.clear();
        acc.add(m, Rational(1));
        acc.add(step.swapped, Rational(-1));
        if (step.contraction) {
          const HbarPoly& c = step.coefficient;
          for (int k = 0; k <= c.degree(); ++k) acc.add(*step.contraction, -c.coeff(k), k);
        }
        ++res.cases;
        if (!acc.is_zero()) {
          res.fail(fmt::format("Tr^q(X - X' - c X'') = {} for X = {}, transposition of heights {},{}",
                               short_text(to_string(ctx.coords, acc.value())), to_string(q, m), h + 1, h + 2));
          if (stop_at_first) return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_quantization(const SchedlerAlgebra& alg, const TraceContext& ctx, int maxdeg,
                               bool divisibility_only, bool stop_at_first) {
  CheckResult res;
  const Quiver& q = alg.quiver();
  auto necklaces = enumerate_necklaces(q, static_cast<std::size_t>(maxdeg));
  for (std::size_t i = 0; i < necklaces.size(); ++i)
    for (std::size_t j = i; j < necklaces.size(); ++j) {
      const Necklace& x = necklaces[i];
      const Necklace& y = necklaces[j];
      ++res.cases;
      WeylSum t = quantum_trace(ctx, alg.commutator(alg.lift(x), alg.lift(y)));
      WeylSum divided;
      divided.with_tag(t.tag());
      bool divisible = true;
      for (const auto& [m, c] : t) {
        if (!c.coeff(0).is_zero()) {
          divisible = false;
          break;
        }
        divided.add(m, c.divided_by_hbar());
      }
      std::string pair = fmt::format("({}, {})", to_string(q, x), to_string(q, y));
      if (!divisible) {
        res.fail(fmt::format("Tr^q[x^, y^] = {} is not divisible by hbar for {}",
                             short_text(to_string(ctx.coords, t)), pair));
        if (stop_at_first) return res;
        continue;
      }
      if (divisibility_only) continue;
      PolySum lhs = phi(divided);
      PolySum rhs = poisson(classical_trace(ctx, x), classical_trace(ctx, y));
      if (!(lhs == rhs)) {
        res.fail(fmt::format("phi(hbar^-1 Tr^q[x^, y^]) = {} but {{Tr x, Tr y}} = {} for {}",
                             short_text(to_string(ctx.coords, lhs)), short_text(to_string(ctx.coords, rhs)), pair));
        if (stop_at_first) return res;
      }
    }
  return res;
}

std::string CalibrationResult::evidence_dump() const {
  std::ostringstream out;
  for (const auto& e : evidence) {
    out << e.convention.str() << (e.admissible() ? "  ADMISSIBLE" : "  rejected") << "\n";
    auto line = [&](const char* name, const CheckResult& c) {
      out << "  " << name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.cases << " cases)";
      if (!c.passed) out << "  " << c.witness;
      out << "\n";
    };
    line("(i) skein annihilation", e.skein);
    line("(ii) hbar-divisibility", e.divisibility);
    line("(iii) trace/quantization identity", e.identity);
  }
  return out.str();
}

CalibrationResult calibrate(std::shared_ptr<const Quiver> q, const DimVector& d, const CalibrationOptions& opts) {
  if (!q->is_doubled()) q = std::make_shared<const Quiver>(q->doubled());
  if (q->vertex_count() > 2 || q->original_arrow_count() > 2)
    throw ResourceLimit("calibration is limited to quivers with at most 2 vertices and 2 arrows");
  for (int x : d.d)
    if (x > 2) throw ResourceLimit("calibration is limited to dimension entries <= 2");
  CalibrationResult result;
  std::vector<SkeinConvention> admissible;
  for (const auto& c : SkeinConvention::all_settings()) {
    SchedlerAlgebra alg(q, c);
    TraceContext ctx(q, d, c);
    SettingEvidence e;
    e.convention = c;
    e.divisibility = check_quantization(alg, ctx, opts.pair_degree, true, true);
    e.identity = check_quantization(alg, ctx, opts.pair_degree, false, true);
    e.skein = check_skein_annihilation(alg, ctx, opts.max_letters, true);
    if (e.admissible()) admissible.push_back(c);
    result.evidence.push_back(std::move(e));
  }
  if (admissible.size() != 1)
    throw CalibrationError(fmt::format("calibration found {} admissible conventions (expected exactly one)",
                                       admissible.size()),
                           result.evidence_dump());
  result.selected = admissible.front();
  return result;
}

Verifier::Verifier(std::shared_ptr<const Quiver> q, DimVector d, SkeinConvention c, VerifyOptions o)
    : quiver_(q->is_doubled() ? q : std::make_shared<const Quiver>(q->doubled())),
      alg_(quiver_, c),
      ctx_(quiver_, std::move(d), c),
      opts_(o) {
  if (opts_.maxdeg < 2) throw DegreeOverflow("maxdeg must be at least 2");
  if (opts_.maxdeg > 6) throw ResourceLimit("maxdeg above 6 exceeds the supported desk scale");
}

FaceRecord Verifier::run(Face f) const {
  switch (f) {
    case Face::Top:
      return run_top(chi0(ctx_.coords));
    case Face::Bottom:
      return run_bottom();
    case Face::Back:
      return run_back();
    case Face::Front:
      return run_front();
    case Face::Left:
      return run_left();
    case Face::Right:
      return run_right();
  }
  throw Error("unknown face");
}

FaceRecord Verifier::run_top(const Character& chi) const {
  FaceRecord rec = start(Face::Top);
  CheckResult res;
  const Quiver& q = *quiver_;
  const CoordSystem& cs = ctx_.coords;
  WeylIndex index;
  CertifiedSpan j;
  for (const auto& g : quantum_reduction_span(cs, chi, opts_.maxdeg)) j.add(index.vec(g));

  auto span = alg_.quantum_ideal_span(opts_.maxdeg, opts_.hbar_truncation);
  std::vector<WeylSum> traces;
  for (const auto& e : span) {
    ++res.cases;
    WeylSum t = quantum_trace(ctx_, e);
    if (weyl_weight(t) > opts_.maxdeg) {
      res.fail(fmt::format("Tr^q({}) has weight {} above maxdeg", short_text(to_string(q, e)), weyl_weight(t)));
      continue;
    }
    SparseVector r = j.residual(index.vec(t));
    if (!r.is_zero())
      res.fail(fmt::format("Tr^q({}) is not in the reduction ideal for chi = {}; residual {}",
                           short_text(to_string(q, e)), chi.str(q),
                           short_text(to_string(cs, index.weyl(r, cs.tag())))));
    traces.push_back(std::move(t));
  }

  // coset identity on sampled PBW monomials
  std::mt19937_64 rng(opts_.seed);
  auto basis = alg_.pbw_basis(opts_.maxdeg);
  for (std::size_t s = 0; s < opts_.samples && !basis.empty() && !traces.empty(); ++s) {
    const HeightMonomial& x = basis[rng() % basis.size()];
    WeylSum tx = quantum_trace(ctx_, x);
    WeylSum shifted = tx;
    for (std::size_t k = 0; k < traces.size(); ++k) {
      auto c = static_cast<std::int64_t>(rng() % 7) - 3;
      if (c != 0) shifted += Rational(c) * traces[k];
    }
    ++res.cases;
    if (!(j.residual(index.vec(tx)) == j.residual(index.vec(shifted))))
      res.fail(fmt::format("coset of Tr^q({}) changes when an ideal element is added", to_string(q, x)));
  }
  finish(rec, res);
  return rec;
}

FaceRecord Verifier::run_bottom() const {
  FaceRecord rec = start(Face::Bottom);
  CheckResult res;
  const Quiver& q = *quiver_;
  const CoordSystem& cs = ctx_.coords;
  WeylIndex index;
  CertifiedSpan c;
  for (const auto& g : classical_reduction_span(cs, opts_.maxdeg)) c.add(index.vec(g));
  for (const auto& g : cyclified_ideal_span(q, moment(q), opts_.maxdeg)) {
    ++res.cases;
    PolySum t = classical_trace(ctx_, g);
    SparseVector r = c.residual(index.vec(t));
    if (!r.is_zero())
      res.fail(fmt::format("Tr({}) is not in the comoment ideal; residual {}", to_string(q, g),
                           short_text(to_string(cs, index.poly(r, cs.tag())))));
  }
  finish(rec, res);
  return rec;
}

FaceRecord Verifier::run_back() const {
  FaceRecord rec = start(Face::Back);
  finish(rec, check_quantization(alg_, ctx_, std::min(3, opts_.maxdeg), false, false));
  return rec;
}

FaceRecord Verifier::run_front() const {
  FaceRecord rec = start(Face::Front);
  CheckResult res;
  const Quiver& q = *quiver_;
  const CoordSystem& cs = ctx_.coords;
  WeylIndex index;
  CertifiedSpan c;
  for (const auto& g : classical_reduction_span(cs, opts_.maxdeg)) c.add(index.vec(g));
  auto necklaces = enumerate_necklaces(q, static_cast<std::size_t>(std::min(3, opts_.maxdeg)));

  // reduced quantization identity
  for (std::size_t i = 0; i < necklaces.size(); ++i)
    for (std::size_t k = i; k < necklaces.size(); ++k) {
      const Necklace& x = necklaces[i];
      const Necklace& y = necklaces[k];
      if (static_cast<int>(x.degree() + y.degree()) - 2 > opts_.maxdeg) continue;
      ++res.cases;
      WeylSum t = quantum_trace(ctx_, alg_.commutator(alg_.lift(x), alg_.lift(y)));
      WeylSum divided;
      bool divisible = true;
      for (const auto& [m, cf] : t) {
        if (!cf.coeff(0).is_zero()) divisible = false;
        else divided.add(m, cf.divided_by_hbar());
      }
      divided.with_tag(cs.tag());
      if (!divisible) {
        res.fail(fmt::format("Tr^q[x^, y^] not divisible by hbar for ({}, {})", to_string(q, x), to_string(q, y)));
        continue;
      }
      SparseVector lhs = c.residual(index.vec(phi(divided)));
      SparseVector rhs = c.residual(index.vec(poisson(classical_trace(ctx_, x), classical_trace(ctx_, y))));
      if (!(lhs == rhs))
        res.fail(fmt::format("reduced identity fails for ({}, {}): {} vs {}", to_string(q, x), to_string(q, y),
                             short_text(to_string(cs, index.poly(lhs, cs.tag()))),
                             short_text(to_string(cs, index.poly(rhs, cs.tag())))));
    }

  // the ideals are stable under the brackets, so the reduced brackets are well defined
  auto gens = cyclified_ideal_span(q, moment(q), opts_.maxdeg);
  auto all = enumerate_necklaces(q, static_cast<std::size_t>(opts_.maxdeg));
  for (const auto& g : gens) {
    int dg = max_degree(g);
    PolySum tg = classical_trace(ctx_, g);
    for (const auto& y : all) {
      if (y.is_idempotent() || dg + static_cast<int>(y.degree()) - 2 > opts_.maxdeg) continue;
      res.cases += 2;
      NecklaceSum ny(y, Rational(1), q.fingerprint());
      SparseVector r1 = c.residual(index.vec(classical_trace(ctx_, necklace_bracket(q, g, ny))));
      if (!r1.is_zero())
        res.fail(fmt::format("Tr{{g, {}}} leaves the comoment ideal for g = {}", to_string(q, y), to_string(q, g)));
      SparseVector r2 = c.residual(index.vec(poisson(tg, classical_trace(ctx_, y))));
      if (!r2.is_zero())
        res.fail(fmt::format("{{Tr g, Tr {}}} leaves the comoment ideal for g = {}", to_string(q, y), to_string(q, g)));
    }
  }
  finish(rec, res);
  return rec;
}

FaceRecord Verifier::run_left() const {
  FaceRecord rec = start(Face::Left);
  CheckResult res;
  const Quiver& q = *quiver_;
  const int maxdeg = opts_.maxdeg;
  auto gens = cyclified_ideal_span(q, moment(q), maxdeg);
  ClassicalReducer reducer(q, gens, maxdeg);
  auto complement = reducer.complement_basis();

  KeyIndex<std::string> index;
  auto key = [&](const SymMonomial& m) { return index.index(to_string(q, m)); };
  auto mod_hbar = [&](const HeightSum& e) {
    SparseVector v;
    for (const auto& [m, c] : e)
      if (!c.coeff(0).is_zero()) v.add(key(forget_heights(q, m)), to_big(c.coeff(0)));
    v.normalize();
    return v;
  };

  EchelonBasis ideal;
  auto span = alg_.quantum_ideal_span(maxdeg, opts_.hbar_truncation);
  for (const auto& e : span) ideal.insert(mod_hbar(e));

  // well defined: products of lifted ideal generators with PBW monomials stay in the ideal mod hbar
  auto basis = alg_.pbw_basis(maxdeg);
  for (const auto& g : gens) {
    HeightSum gh = alg_.lift(g);
    int dg = max_degree(g);
    for (const auto& z : basis) {
      if (dg + static_cast<int>(z.pbw_weight()) > maxdeg) continue;
      res.cases += 2;
      HeightSum zh = alg_.element(z);
      if (!ideal.contains(mod_hbar(alg_.star(gh, zh))))
        res.fail(fmt::format("g^ * z^ leaves the quantum ideal mod hbar for g = {}, z = {}", to_string(q, g),
                             to_string(q, z)));
      if (!ideal.contains(mod_hbar(alg_.star(zh, gh))))
        res.fail(fmt::format("z^ * g^ leaves the quantum ideal mod hbar for g = {}, z = {}", to_string(q, g),
                             to_string(q, z)));
    }
  }

  // injectivity: monomials in complement necklaces are independent modulo the ideal
  std::size_t independent = 0;
  std::size_t total = 0;
  for (const auto& s : symmetric_monomials(q, maxdeg)) {
    ++total;
    bool inside = std::all_of(s.begin(), s.end(), [&](const Necklace& n) {
      return std::find(complement.begin(), complement.end(), n) != complement.end();
    });
    if (!inside) continue;
    ++res.cases;
    HeightSum lifted = alg_.element(alg_.pbw_monomial(s));
    if (!ideal.insert(mod_hbar(lifted))) {
      res.fail(fmt::format("{} is dependent modulo the quantum ideal and hbar", to_string(q, s)));
    } else {
      ++independent;
    }
  }
  // and they span the quotient at this truncation
  ++res.cases;
  std::size_t ideal_rank = ideal.rank() - independent;
  if (ideal_rank + independent != total)
    res.fail(fmt::format("dimension count: rank(ideal mod hbar) {} + complement monomials {} != {} monomials",
                         ideal_rank, independent, total));
  finish(rec, res);
  return rec;
}

FaceRecord Verifier::run_right() const {
  FaceRecord rec = start(Face::Right);
  CheckResult res;
  const CoordSystem& cs = ctx_.coords;
  const Quiver& q = *quiver_;
  Character chi = chi0(cs);
  auto basis = gl_basis(cs);
  int sign = 0;
  for (const auto& xi : basis) {
    ++res.cases;
    PolySum symbol = phi(tau(cs, xi) - weyl_constant(cs, HbarPoly::monomial(chi(xi), 1)));
    PolySum mu = classical_comoment(cs, xi);
    int s = 0;
    if (symbol == mu) s = 1;
    if (symbol == -mu) s = s == 0 ? -1 : s;  // both zero: any sign
    bool zero = symbol.is_zero() && mu.is_zero();
    if (s == 0) {
      res.fail(fmt::format("symbol of (tau - hbar chi0)(e^{}_{}{}) differs from +-comoment", q.vertex_name(xi.vertex),
                           xi.p + 1, xi.q + 1));
      continue;
    }
    if (zero) continue;
    if (sign == 0) sign = s;
    if (s != sign) res.fail("symbol/comoment sign is not uniform over gl_d");
  }

  // kernel of tau and chi0 on it
  WeylIndex index;
  EchelonBasis images(true);
  std::vector<std::vector<BigRational>> kernel;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SparseVector v = index.vec(tau(cs, basis[i]));
    auto red = images.reduce(v);
    if (red.residual.is_zero()) {
      std::vector<BigRational> k(basis.size(), 0);
      k[i] = 1;
      for (const auto& [g, c] : red.certificate) k[g] -= c;
      kernel.push_back(std::move(k));
    }
    images.insert(v);
  }
  ++res.cases;
  if (!kernel.empty()) {
    bool nonzero = false;
    for (const auto& k : kernel) {
      BigRational value = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) value += k[i] * to_big(chi(basis[i]));
      if (sgn(value) != 0) nonzero = true;
    }
    if (!nonzero) res.fail(fmt::format("chi0 = {} vanishes on ker tau", chi.str(q)));
  }
  finish(rec, res);
  return rec;
}

bool VerificationReport::all_passed() const {
  return std::all_of(faces.begin(), faces.end(), [](const FaceRecord& f) { return f.passed; });
}

std::string VerificationReport::to_json(bool include_timings) const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["quiver"] = quiver;
  j["dim"] = dim.d;
  j["maxdeg"] = maxdeg;
  j["seed"] = seed;
  j["convention"] = {
      {"inter_hbar_power", convention.inter_hbar_power},
      {"intra_hbar_power", convention.intra_hbar_power},
      {"sign", convention.sign},
      {"order", convention.order == OperatorOrder::LowerLeft ? "lower-left" : "lower-right"},
  };
  j["faces"] = nlohmann::ordered_json::array();
  for (const auto& f : faces) {
    nlohmann::ordered_json r;
    r["id"] = f.id;
    r["statement"] = f.statement;
    r["cases"] = f.cases;
    r["passed"] = f.passed;
    r["witness"] = f.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(f.witness);
    r["surrogate"] = f.surrogate;
    if (include_timings) r["seconds"] = f.seconds;
    j["faces"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << fmt::format("quiver {} dim ({}) maxdeg {} seed {}\nconvention {}\n", quiver, dim.str(), maxdeg, seed,
                     convention.str());
  for (const auto& f : faces) {
    out << fmt::format("{:<7}{}  cases={:<6} {:.2f}s{}\n", f.id, f.passed ? "pass" : "FAIL", f.cases, f.seconds,
                       f.surrogate ? "  (surrogate)" : "");
    if (!f.passed) out << "       witness: " << f.witness << "\n";
  }
  out << (all_passed() ? "all faces pass\n" : "verification FAILED\n");
  return out.str();
}

VerificationReport verify_all(std::shared_ptr<const Quiver> q, const DimVector& d, const SkeinConvention& c,
                              const VerifyOptions& o, const std::vector<Face>& faces) {
  Verifier v(q, d, c, o);
  VerificationReport r;
  r.quiver = q->name();
  r.dim = d;
  r.maxdeg = o.maxdeg;
  r.seed = o.seed;
  r.convention = c;
  for (Face f : faces) {
    auto t0 = std::chrono::steady_clock::now();
    FaceRecord rec = v.run(f);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.faces.push_back(std::move(rec));
  }
  return r;
}

}  // namespace nqr
