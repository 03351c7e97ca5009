#include "nqr/necklace.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

#include "nqr/error.hpp"
#include "nqr/linalg.hpp"

namespace nqr {

Necklace Necklace::idempotent(VertexId v) {
  Necklace n;
  n.base_ = v;
  return n;
}

Necklace Necklace::from_canonical(VertexId base, std::vector<ArrowId> word) {
  Necklace n;
  n.base_ = base;
  n.word_ = std::move(word);
  return n;
}

bool operator<(const Necklace& a, const Necklace& b) {
  if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
  if (a.word_ != b.word_) return a.word_ < b.word_;
  return a.base_ < b.base_;
}

std::size_t canonical_rotation(std::span<const ArrowId> word) {
  const std::size_t n = word.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      ArrowId x = word[(r + k) % n];
      ArrowId y = word[(best + k) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  return best;
}

Necklace normalize(const Quiver& q, std::span<const ArrowId> word) {
  validate_cycle(q, word);
  std::size_t r = canonical_rotation(word);
  std::vector<ArrowId> w(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) w[k] = word[(r + k) % word.size()];
  VertexId base = q.source(w.front());
  return Necklace::from_canonical(base, std::move(w));
}

NecklaceSum necklace_element(const Quiver& q, std::span<const ArrowId> word, Rational c) {
  return NecklaceSum(normalize(q, word), c, q.fingerprint());
}

NecklaceSum idempotent_element(const Quiver& q, VertexId v, Rational c) {
  if (v >= q.vertex_count()) throw QuiverError(fmt::format("unknown vertex id {}", v));
  return NecklaceSum(Necklace::idempotent(v), c, q.fingerprint());
}

NecklaceSum necklace_bracket(const Quiver& q, const Necklace& x, const Necklace& y) {
  NecklaceSum out;
  out.with_tag(q.fingerprint());
  if (x.is_idempotent() || y.is_idempotent()) return out;
  const auto& a = x.word();
  const auto& b = y.word();
  const std::size_t k = a.size();
  const std::size_t l = b.size();
  std::vector<ArrowId> w;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      int c = q.pairing(a[i], b[j]);
      if (c == 0) continue;
      w.clear();
      for (std::size_t s = 1; s < k; ++s) w.push_back(a[(i + s) % k]);
      for (std::size_t s = 1; s < l; ++s) w.push_back(b[(j + s) % l]);
      if (w.empty()) {
        out.add(Necklace::idempotent(q.target(a[i])), Rational(c));
      } else {
        out.add(normalize(q, w), Rational(c));
      }
    }
  }
  return out;
}

NecklaceSum necklace_bracket(const Quiver& q, const NecklaceSum& x, const NecklaceSum& y) {
  NecklaceSum out;
  out.with_tag(q.fingerprint());
  out.merge_tag(x.tag());
  out.merge_tag(y.tag());
  for (const auto& [nx, cx] : x)
    for (const auto& [ny, cy] : y) {
      NecklaceSum t = necklace_bracket(q, nx, ny);
      t *= cx * cy;
      out += t;
    }
  return out;
}

VertexId path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.source : q.target(p.arrows.back());
}

PathSum path_product(const Quiver& q, const PathSum& x, const PathSum& y) {
  PathSum out;
  out.with_tag(q.fingerprint());
  out.merge_tag(x.tag());
  out.merge_tag(y.tag());
  for (const auto& [px, cx] : x)
    for (const auto& [py, cy] : y) {
      if (path_target(q, px) != py.source) continue;
      Path p = px;
      p.arrows.insert(p.arrows.end(), py.arrows.begin(), py.arrows.end());
      out.add(p, cx * cy);
    }
  return out;
}

NecklaceSum cyclify(const Quiver& q, const PathSum& x) {
  NecklaceSum out;
  out.with_tag(q.fingerprint());
  for (const auto& [p, c] : x) {
    if (path_target(q, p) != p.source) continue;
    if (p.arrows.empty()) out.add(Necklace::idempotent(p.source), c);
    else out.add(normalize(q, p.arrows), c);
  }
  return out;
}

MomentElement moment(const Quiver& q, std::span<const Rational> lambda) {
  if (!q.is_doubled()) throw QuiverError("moment requires a doubled quiver");
  if (!lambda.empty() && lambda.size() != q.vertex_count())
    throw DimensionMismatch(fmt::format("lambda has {} entries, quiver has {} vertices",
                                        lambda.size(), q.vertex_count()));
  MomentElement m;
  m.lambda.assign(q.vertex_count(), Rational(0));
  std::copy(lambda.begin(), lambda.end(), m.lambda.begin());
  m.element.with_tag(q.fingerprint());
  for (ArrowId a : q.original_arrows()) {
    ArrowId s = q.star(a);
    m.element.add(Path{q.source(a), {a, s}}, Rational(1));
    m.element.add(Path{q.target(a), {s, a}}, Rational(-1));
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v) m.element.add(Path{v, {}}, -m.lambda[v]);
  return m;
}

std::vector<Path> closed_paths(const Quiver& q, std::size_t maxlen) {
  std::vector<Path> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    std::vector<Path> frontier{Path{v, {}}};
    for (std::size_t len = 0; len <= maxlen; ++len) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        if (path_target(q, p) == v) out.push_back(p);
        if (len == maxlen) continue;
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
          if (q.source(a) != path_target(q, p)) continue;
          Path n = p;
          n.arrows.push_back(a);
          next.push_back(std::move(n));
        }
      }
      frontier = std::move(next);
    }
  }
  return out;
}

std::vector<Necklace> enumerate_necklaces(const Quiver& q, std::size_t maxdeg) {
  std::set<Necklace> seen;
  for (const auto& p : closed_paths(q, maxdeg)) {
    if (p.arrows.empty()) seen.insert(Necklace::idempotent(p.source));
    else seen.insert(normalize(q, p.arrows));
  }
  return {seen.begin(), seen.end()};
}

namespace {

struct NecklaceHash {
  std::size_t operator()(const Necklace& n) const noexcept {
    std::size_t h = n.base() * 1315423911u;
    for (ArrowId a : n.word()) h = h * 31u + a + 1;
    return h;
  }
};

}  // namespace

std::vector<NecklaceSum> cyclified_ideal_span(const Quiver& q, const MomentElement& m,
                                              int maxdeg) {
  if (maxdeg < 2) throw DegreeOverflow("maxdeg must be at least deg(w) = 2");
  KeyIndex<Necklace, NecklaceHash> index;
  for (const auto& n : enumerate_necklaces(q, static_cast<std::size_t>(maxdeg))) index.index(n);
  EchelonBasis basis;
  std::vector<NecklaceSum> out;
  for (const auto& p : closed_paths(q, static_cast<std::size_t>(maxdeg - 2))) {
    PathSum pp(p, Rational(1), q.fingerprint());
    NecklaceSum g = cyclify(q, path_product(q, pp, m.element));
    if (g.is_zero()) continue;
    SparseVector v;
    for (const auto& [n, c] : g) v.add(index.index(n), to_big(c));
    v.normalize();
    if (basis.insert(v)) out.push_back(std::move(g));
  }
  return out;
}

int max_degree(const NecklaceSum& x) {
  int d = -1;
  for (const auto& [n, c] : x) d = std::max(d, static_cast<int>(n.degree()));
  return d;
}

ClassicalReducer::ClassicalReducer(const Quiver& q, const std::vector<NecklaceSum>& span,
                                   int maxdeg)
    : necklaces_(enumerate_necklaces(q, static_cast<std::size_t>(std::max(maxdeg, 0)))),
      basis_(std::make_unique<EchelonBasis>()),
      maxdeg_(maxdeg),
      tag_(q.fingerprint()) {
  for (const auto& s : span) {
    if (max_degree(s) > maxdeg) throw DegreeOverflow("span element exceeds maxdeg");
    SparseVector v;
    for (const auto& [n, c] : s) {
      auto it = std::lower_bound(necklaces_.begin(), necklaces_.end(), n);
      v.add(static_cast<std::size_t>(it - necklaces_.begin()), to_big(c));
    }
    v.normalize();
    basis_->insert(v);
  }
}

ClassicalReducer::~ClassicalReducer() = default;
ClassicalReducer::ClassicalReducer(ClassicalReducer&&) noexcept = default;
ClassicalReducer& ClassicalReducer::operator=(ClassicalReducer&&) noexcept = default;

std::size_t ClassicalReducer::rank() const { return basis_->rank(); }

NecklaceSum ClassicalReducer::reduce(const NecklaceSum& x) const {
  if (max_degree(x) > maxdeg_)
    throw DegreeOverflow(fmt::format("element of degree {} exceeds maxdeg {}", max_degree(x), maxdeg_));
  SparseVector v;
  for (const auto& [n, c] : x) {
    auto it = std::lower_bound(necklaces_.begin(), necklaces_.end(), n);
    if (it == necklaces_.end() || !(*it == n)) throw QuiverMismatch("necklace outside the reducer's quiver");
    v.add(static_cast<std::size_t>(it - necklaces_.begin()), to_big(c));
  }
  v.normalize();
  auto r = basis_->reduce(v);
  NecklaceSum out;
  out.with_tag(tag_);
  for (const auto& [i, c] : r.residual.entries) {
    out.add(necklaces_[i], from_big(c));
  }
  return out;
}

std::vector<Necklace> ClassicalReducer::complement_basis() const {
  std::vector<Necklace> out;
  for (std::size_t i = 0; i < necklaces_.size(); ++i)
    if (!basis_->is_pivot(i)) out.push_back(necklaces_[i]);
  return out;
}

NecklaceSum reduce_classical(const Quiver& q, const NecklaceSum& x,
                             const std::vector<NecklaceSum>& span, int maxdeg) {
  return ClassicalReducer(q, span, maxdeg).reduce(x);
}

}  // namespace nqr
