#include "nqr/linalg.hpp"

#include <algorithm>

#include "nqr/error.hpp"

namespace nqr {

BigRational to_big(const Rational& r) {
  BigRational q(mpz_class(static_cast<long>(r.num())), mpz_class(static_cast<long>(r.den())));
  q.canonicalize();
  return q;
}

Rational from_big(const BigRational& r) {
  const mpz_class& n = r.get_num();
  const mpz_class& d = r.get_den();
  if (!n.fits_slong_p() || !d.fits_slong_p()) throw ArithmeticOverflow("rational does not fit in 64 bits");
  return Rational(n.get_si(), d.get_si());
}

void SparseVector::add(std::size_t index, const BigRational& value) {
  entries.emplace_back(index, value);
}

void SparseVector::normalize() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, BigRational>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
    else merged.push_back(std::move(e));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return sgn(e.second) == 0; }),
               merged.end());
  entries = std::move(merged);
}

SparseVector axpy(const SparseVector& y, const BigRational& a, const SparseVector& x) {
  SparseVector r = y;
  for (const auto& [i, v] : x.entries) r.add(i, a * v);
  r.normalize();
  return r;
}

EchelonBasis::EchelonBasis(bool track_certificates) : track_(track_certificates) {}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

namespace {

using DenseMap = std::map<std::size_t, BigRational>;

void subtract_scaled(DenseMap& target, const BigRational& c, const DenseMap& row) {
  for (const auto& [i, v] : row) {
    auto [it, inserted] = target.try_emplace(i, 0);
    it->second -= c * v;
    if (sgn(it->second) == 0) target.erase(it);
  }
}

// eliminates pivots from the top down; entries only move to lower indices
template <class Rows>
void eliminate(const Rows& rows, DenseMap& v, DenseMap* combo, bool track) {
  auto it = v.end();
  while (it != v.begin()) {
    --it;
    auto row = rows.find(it->first);
    if (row == rows.end()) continue;
    BigRational c = it->second;
    std::size_t key = it->first;
    subtract_scaled(v, c, row->second.v);
    if (track && combo) subtract_scaled(*combo, c, row->second.combo);
    it = v.lower_bound(key);
  }
}

}  // namespace

bool EchelonBasis::insert(const SparseVector& vec) {
  std::size_t id = generators_++;
  DenseMap v(vec.entries.begin(), vec.entries.end());
  DenseMap combo;
  if (track_) combo[id] = 1;
  eliminate(rows_, v, &combo, track_);
  if (v.empty()) return false;
  auto lead = std::prev(v.end());
  BigRational inv = 1 / lead->second;
  for (auto& [i, x] : v) x *= inv;
  for (auto& [i, x] : combo) x *= inv;
  std::size_t pivot = lead->first;
  rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
  return true;
}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVector& q) const {
  DenseMap v(q.entries.begin(), q.entries.end());
  DenseMap combo;
  eliminate(rows_, v, &combo, track_);
  Reduction r;
  r.residual.entries.assign(v.begin(), v.end());
  // combo holds -(coefficients); query = residual + sum(-combo) * generators
  for (auto& [g, c] : combo) r.certificate.emplace_back(g, -c);
  return r;
}

MembershipResult solve_membership(const IdealMembershipProblem& p) {
  EchelonBasis basis(true);
  for (const auto& s : p.spanning) basis.insert(s);
  auto red = basis.reduce(p.query);
  MembershipResult out;
  out.residual = red.residual;
  out.member = red.residual.is_zero();
  out.certificate.assign(p.spanning.size(), BigRational(0));
  for (const auto& [g, c] : red.certificate) out.certificate[g] = c;
  return out;
}

bool MembershipResult::verify(const IdealMembershipProblem& p) const {
  if (certificate.size() != p.spanning.size()) return false;
  SparseVector acc = residual;
  for (std::size_t g = 0; g < certificate.size(); ++g)
    if (sgn(certificate[g]) != 0) acc = axpy(acc, certificate[g], p.spanning[g]);
  acc.normalize();
  SparseVector q = p.query;
  q.normalize();
  return acc == q && member == residual.is_zero();
}

}  // namespace nqr
