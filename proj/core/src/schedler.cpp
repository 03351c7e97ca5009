#include "nqr/schedler.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "nqr/error.hpp"
#include "nqr/linalg.hpp"

namespace nqr {

HeightMonomial HeightMonomial::make(const Quiver& q, std::vector<Component> components,
                                    std::vector<VertexId> idempotents) {
  std::set<std::uint32_t> heights;
  std::vector<ArrowId> word;
  for (const auto& c : components) {
    if (c.empty()) throw InvalidMonomial("empty height component");
    word.clear();
    for (const auto& l : c) {
      if (!heights.insert(l.height).second)
        throw InvalidMonomial(fmt::format("duplicate height {}", l.height + 1));
      word.push_back(l.arrow);
    }
    validate_cycle(q, word);
  }
  for (VertexId v : idempotents)
    if (v >= q.vertex_count()) throw InvalidMonomial(fmt::format("unknown vertex id {}", v));
  return make_unchecked(std::move(components), std::move(idempotents));
}

HeightMonomial HeightMonomial::make_unchecked(std::vector<Component> components,
                                              std::vector<VertexId> idempotents) {
  HeightMonomial m;
  m.components_ = std::move(components);
  m.idempotents_ = std::move(idempotents);
  m.canonicalize();
  return m;
}

void HeightMonomial::canonicalize() {
  std::vector<std::uint32_t> hs;
  for (const auto& c : components_)
    for (const auto& l : c) hs.push_back(l.height);
  std::sort(hs.begin(), hs.end());
  for (auto& c : components_) {
    for (auto& l : c)
      l.height = static_cast<std::uint32_t>(std::lower_bound(hs.begin(), hs.end(), l.height) - hs.begin());
    auto lowest = std::min_element(c.begin(), c.end(),
                                   [](const auto& a, const auto& b) { return a.height < b.height; });
    std::rotate(c.begin(), lowest, c.end());
  }
  std::sort(components_.begin(), components_.end(),
            [](const Component& a, const Component& b) { return a.front().height < b.front().height; });
  std::sort(idempotents_.begin(), idempotents_.end());
  letters_ = hs.size();
}

HeightMonomial HeightMonomial::stack(const HeightMonomial& a, const HeightMonomial& b) {
  std::vector<Component> comps = a.components_;
  auto shift = static_cast<std::uint32_t>(a.letters_);
  for (auto c : b.components_) {
    for (auto& l : c) l.height += shift;
    comps.push_back(std::move(c));
  }
  std::vector<VertexId> idems = a.idempotents_;
  idems.insert(idems.end(), b.idempotents_.begin(), b.idempotents_.end());
  return make_unchecked(std::move(comps), std::move(idems));
}

std::size_t HeightMonomialHash::operator()(const HeightMonomial& m) const noexcept {
  std::size_t h = 0x345678;
  for (const auto& c : m.components()) {
    h = h * 1000003u ^ c.size();
    for (const auto& l : c) h = (h * 1000003u) ^ (l.arrow * 64u + l.height);
  }
  for (VertexId v : m.idempotents()) h = (h * 1000003u) ^ (v + 0x9e37u);
  return h;
}

SymMonomial forget_heights(const Quiver& q, const HeightMonomial& m) {
  SymMonomial out;
  std::vector<ArrowId> word;
  for (const auto& c : m.components()) {
    word.clear();
    for (const auto& l : c) word.push_back(l.arrow);
    out.push_back(normalize(q, word));
  }
  for (VertexId v : m.idempotents()) out.push_back(Necklace::idempotent(v));
  std::sort(out.begin(), out.end());
  return out;
}

SymSum forget_heights(const Quiver& q, const HeightSum& x) {
  SymSum out;
  out.with_tag(x.tag());
  for (const auto& [m, c] : x) out.add(forget_heights(q, m), c);
  return out;
}

std::string SkeinConvention::str() const {
  return fmt::format("inter_hbar={} intra_hbar={} sign={:+d} order={}", inter_hbar_power,
                     intra_hbar_power, sign,
                     order == OperatorOrder::LowerLeft ? "lower-left" : "lower-right");
}

std::vector<SkeinConvention> SkeinConvention::all_settings() {
  std::vector<SkeinConvention> out;
  for (int k : {0, 1})
    for (int s : {1, -1})
      for (auto o : {OperatorOrder::LowerLeft, OperatorOrder::LowerRight})
        out.push_back(SkeinConvention{k, 1, s, o});
  return out;
}

SchedlerAlgebra::SchedlerAlgebra(std::shared_ptr<const Quiver> q, SkeinConvention c)
    : quiver_(std::move(q)), convention_(c), tag_(quiver_->fingerprint()) {
  if (!quiver_->is_doubled()) throw QuiverError("the quantized necklace algebra needs a doubled quiver");
}

HeightSum SchedlerAlgebra::element(const HeightMonomial& m, HbarPoly c) const {
  return HeightSum(m, std::move(c), tag_);
}

HeightMonomial SchedlerAlgebra::pbw_monomial(const SymMonomial& multiset) const {
  return lift_monomial(multiset);
}

HeightMonomial lift_monomial(const SymMonomial& multiset) {
  std::vector<HeightMonomial::Component> comps;
  std::vector<VertexId> idems;
  std::uint32_t h = 0;
  for (const auto& n : multiset) {
    if (n.is_idempotent()) {
      idems.push_back(n.base());
      continue;
    }
    HeightMonomial::Component c;
    for (ArrowId a : n.word()) c.push_back(HeightLetter{a, h++});
    comps.push_back(std::move(c));
  }
  return HeightMonomial::make_unchecked(std::move(comps), std::move(idems));
}

bool SchedlerAlgebra::is_pbw_normal(const HeightMonomial& m) const {
  return m == pbw_monomial(forget_heights(*quiver_, m));
}

HeightSum SchedlerAlgebra::lift(const Necklace& n) const { return element(pbw_monomial({n})); }

HeightSum SchedlerAlgebra::lift(const NecklaceSum& x) const {
  HeightSum out;
  out.with_tag(tag_);
  out.merge_tag(x.tag());
  for (const auto& [n, c] : x) out.add(pbw_monomial({n}), HbarPoly(c));
  return out;
}

namespace {

struct Location {
  std::size_t comp;
  std::size_t pos;
};

Location locate(const std::vector<HeightMonomial::Component>& comps, std::uint32_t h) {
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t p = 0; p < comps[c].size(); ++p)
      if (comps[c][p].height == h) return {c, p};
  throw InvalidMonomial(fmt::format("no letter at height {}", h + 1));
}

}  // namespace

SchedlerAlgebra::SkeinStep SchedlerAlgebra::skein_step(const HeightMonomial& m, std::size_t h) const {
  if (h + 1 >= m.letter_count()) throw InvalidMonomial("transposition outside the height range");
  const auto& comps = m.components();
  auto h0 = static_cast<std::uint32_t>(h);
  Location lo = locate(comps, h0);
  Location up = locate(comps, h0 + 1);
  const HeightLetter l = comps[lo.comp][lo.pos];
  const HeightLetter u = comps[up.comp][up.pos];

  SkeinStep step;
  {
    auto swapped = comps;
    swapped[lo.comp][lo.pos].height = h0 + 1;
    swapped[up.comp][up.pos].height = h0;
    step.swapped = HeightMonomial::make_unchecked(std::move(swapped), m.idempotents());
  }
  step.intra = lo.comp == up.comp;
  int pair = quiver_->pairing(l.arrow, u.arrow);
  if (pair == 0) return step;

  const Quiver& q = *quiver_;
  std::vector<HeightMonomial::Component> rest;
  std::vector<VertexId> idems = m.idempotents();
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (c != lo.comp && c != up.comp) rest.push_back(comps[c]);

  if (!step.intra) {
    const auto& cl = comps[lo.comp];
    const auto& cu = comps[up.comp];
    HeightMonomial::Component joined;
    for (std::size_t s = 1; s < cl.size(); ++s) joined.push_back(cl[(lo.pos + s) % cl.size()]);
    for (std::size_t s = 1; s < cu.size(); ++s) joined.push_back(cu[(up.pos + s) % cu.size()]);
    if (joined.empty()) idems.push_back(q.target(l.arrow));
    else rest.push_back(std::move(joined));
    step.coefficient = HbarPoly::monomial(Rational(convention_.sign * pair), convention_.inter_hbar_power);
  } else {
    const auto& c = comps[lo.comp];
    const std::size_t n = c.size();
    HeightMonomial::Component p1, p2;
    for (std::size_t k = (up.pos + 1) % n; k != lo.pos; k = (k + 1) % n) p1.push_back(c[k]);
    for (std::size_t k = (lo.pos + 1) % n; k != up.pos; k = (k + 1) % n) p2.push_back(c[k]);
    if (p1.empty()) idems.push_back(q.target(u.arrow));
    else rest.push_back(std::move(p1));
    if (p2.empty()) idems.push_back(q.target(l.arrow));
    else rest.push_back(std::move(p2));
    step.coefficient = HbarPoly::monomial(Rational(convention_.sign * pair), convention_.intra_hbar_power);
  }
  step.contraction = HeightMonomial::make_unchecked(std::move(rest), std::move(idems));
  return step;
}

HeightSum SchedlerAlgebra::rewrite_to_pbw(const HeightMonomial& m) const {
  return rewrite_impl(m, nullptr);
}

HeightSum SchedlerAlgebra::rewrite_to_pbw(const HeightMonomial& m, std::mt19937_64& rng) const {
  return rewrite_impl(m, &rng);
}

HeightSum SchedlerAlgebra::rewrite_impl(const HeightMonomial& m, std::mt19937_64* rng) const {
  if (!rng) {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  const Quiver& q = *quiver_;
  auto comps = m.components();
  const std::size_t n = m.letter_count();

  // target heights: components ordered as in the canonical lift, each read
  // from an occurrence of its canonical first letter
  struct Info {
    Necklace necklace;
    std::vector<std::size_t> offsets;
    std::uint64_t tie;
  };
  std::vector<Info> info;
  std::vector<ArrowId> word;
  for (const auto& c : comps) {
    word.clear();
    for (const auto& l : c) word.push_back(l.arrow);
    Necklace nk = normalize(q, word);
    std::vector<std::size_t> offsets;
    for (std::size_t r = 0; r < word.size(); ++r) {
      bool same = true;
      for (std::size_t k = 0; k < word.size() && same; ++k)
        same = word[(r + k) % word.size()] == nk.word()[k];
      if (same) offsets.push_back(r);
    }
    std::uint64_t tie = rng ? (*rng)() : c.front().height;
    info.push_back(Info{std::move(nk), std::move(offsets), tie});
  }
  std::vector<std::size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (info[a].necklace == info[b].necklace) return info[a].tie < info[b].tie;
    return info[a].necklace < info[b].necklace;
  });
  std::vector<std::uint32_t> target_at(n);  // target of the letter currently at height h
  {
    std::uint32_t base = 0;
    for (std::size_t c : order) {
      const auto& comp = comps[c];
      const auto& offs = info[c].offsets;
      std::size_t r = rng ? offs[(*rng)() % offs.size()] : offs.front();
      for (std::size_t k = 0; k < comp.size(); ++k)
        target_at[comp[(r + k) % comp.size()].height] = base + static_cast<std::uint32_t>(k);
      base += static_cast<std::uint32_t>(comp.size());
    }
  }

  HeightSum out;
  out.with_tag(tag_);
  std::vector<std::size_t> inversions;
  while (true) {
    inversions.clear();
    for (std::size_t h = 0; h + 1 < n; ++h)
      if (target_at[h] > target_at[h + 1]) {
        inversions.push_back(h);
        if (!rng) break;
      }
    if (inversions.empty()) break;
    std::size_t h = rng ? inversions[(*rng)() % inversions.size()] : inversions.front();
    HeightMonomial current = HeightMonomial::make_unchecked(comps, m.idempotents());
    SkeinStep step = skein_step(current, h);
    if (step.contraction) {
      HeightSum sub = rewrite_impl(*step.contraction, rng);
      sub *= step.coefficient;
      out += sub;
    }
    auto h0 = static_cast<std::uint32_t>(h);
    Location lo = locate(comps, h0);
    Location up = locate(comps, h0 + 1);
    comps[lo.comp][lo.pos].height = h0 + 1;
    comps[up.comp][up.pos].height = h0;
    std::swap(target_at[h], target_at[h + 1]);
  }
  HeightMonomial normal = HeightMonomial::make_unchecked(std::move(comps), m.idempotents());
  out.add(normal, HbarPoly(1));
  if (!rng) {
    std::lock_guard lock(mutex_);
    cache_.emplace(m, out);
  }
  return out;
}

HeightSum SchedlerAlgebra::normal_form(const HeightSum& x) const {
  HeightSum out;
  out.with_tag(tag_);
  out.merge_tag(x.tag());
  for (const auto& [m, c] : x) {
    HeightSum t = rewrite_to_pbw(m);
    t *= c;
    out += t;
  }
  return out;
}

HeightSum SchedlerAlgebra::star(const HeightSum& x, const HeightSum& y) const {
  HeightSum out;
  out.with_tag(tag_);
  out.merge_tag(x.tag());
  out.merge_tag(y.tag());
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      HeightSum t = rewrite_to_pbw(HeightMonomial::stack(mx, my));
      t *= cx * cy;
      out += t;
    }
  return out;
}

HeightSum SchedlerAlgebra::commutator(const HeightSum& x, const HeightSum& y) const {
  return star(x, y) - star(y, x);
}

HeightSum SchedlerAlgebra::quantum_moment() const {
  HeightSum raw;
  raw.with_tag(tag_);
  for (ArrowId a : quiver_->original_arrows()) {
    ArrowId s = quiver_->star(a);
    raw.add(HeightMonomial::make_unchecked({{HeightLetter{a, 0}, HeightLetter{s, 1}}}), HbarPoly(1));
    raw.add(HeightMonomial::make_unchecked({{HeightLetter{s, 0}, HeightLetter{a, 1}}}), HbarPoly(-1));
  }
  return normal_form(raw);
}

std::vector<SymMonomial> symmetric_monomials(const Quiver& q, int maxdeg) {
  std::vector<Necklace> necklaces = enumerate_necklaces(q, static_cast<std::size_t>(std::max(maxdeg, 0)));
  std::vector<SymMonomial> out;
  SymMonomial cur;
  auto rec = [&](auto&& self, std::size_t start, int budget) -> void {
    out.push_back(cur);
    for (std::size_t i = start; i < necklaces.size(); ++i) {
      int w = static_cast<int>(necklaces[i].pbw_weight());
      if (w > budget) continue;
      cur.push_back(necklaces[i]);
      self(self, i, budget - w);
      cur.pop_back();
    }
  };
  rec(rec, 0, maxdeg);
  return out;
}

std::vector<HeightMonomial> SchedlerAlgebra::pbw_basis(int maxdeg) const {
  std::vector<HeightMonomial> out;
  for (const auto& s : symmetric_monomials(*quiver_, maxdeg)) out.push_back(pbw_monomial(s));
  return out;
}

int max_pbw_weight(const HeightSum& x) {
  int w = -1;
  for (const auto& [m, c] : x) w = std::max(w, static_cast<int>(m.pbw_weight()));
  return w;
}

std::vector<HeightSum> SchedlerAlgebra::quantum_ideal_span(int maxdeg, int hbar_truncation) const {
  if (maxdeg < 2) throw DegreeOverflow("maxdeg must be at least 2");
  const Quiver& q = *quiver_;
  auto gens = cyclified_ideal_span(q, moment(q), maxdeg);
  auto basis = pbw_basis(maxdeg);
  KeyIndex<HeightMonomial, HeightMonomialHash> index;
  const auto stride = static_cast<std::size_t>(hbar_truncation) + 1;
  auto to_vec = [&](const HeightSum& e, int shift) {
    SparseVector v;
    for (const auto& [mon, c] : e) {
      std::size_t base = index.index(mon) * stride;
      for (int k = 0; k <= c.degree(); ++k) {
        int p = k + shift;
        if (p > hbar_truncation || c.coeff(k).is_zero()) continue;
        v.add(base + static_cast<std::size_t>(p), to_big(c.coeff(k)));
      }
    }
    v.normalize();
    return v;
  };
  EchelonBasis echelon;
  std::vector<HeightSum> out;
  for (const auto& g : gens) {
    HeightSum gh = lift(g);
    int dg = max_degree(g);
    for (const auto& u : basis) {
      int wu = static_cast<int>(u.pbw_weight());
      if (wu + dg > maxdeg) continue;
      HeightSum ug = star(element(u), gh);
      for (const auto& v : basis) {
        if (wu + dg + static_cast<int>(v.pbw_weight()) > maxdeg) continue;
        HeightSum e = star(ug, element(v));
        if (e.is_zero() || echelon.contains(to_vec(e, 0))) continue;
        for (int j = 0; j <= hbar_truncation; ++j) echelon.insert(to_vec(e, j));
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

std::size_t SchedlerAlgebra::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

}  // namespace nqr
