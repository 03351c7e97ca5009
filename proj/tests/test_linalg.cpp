#include <doctest.h>

#include <random>

#include "nqr/linalg.hpp"
#include "oracle.hpp"

using namespace nqr;

namespace {

SparseVector vec(std::initializer_list<std::pair<std::size_t, long>> e) {
  SparseVector v;
  for (auto [i, c] : e) v.add(i, BigRational(c));
  v.normalize();
  return v;
}

}  // namespace

TEST_CASE("sparse vectors normalize") {
  SparseVector v;
  v.add(3, 1);
  v.add(1, 2);
  v.add(3, -1);
  v.normalize();
  REQUIRE(v.entries.size() == 1);
  CHECK(v.entries[0].first == 1);
  CHECK(axpy(v, -2, vec({{1, 1}})).is_zero());
}

TEST_CASE("membership of the first spanning vector") {
  IdealMembershipProblem p{4, {vec({{0, 1}, {2, 3}}), vec({{1, 1}}), vec({{2, 1}, {3, 1}})}, vec({{0, 1}, {2, 3}})};
  auto r = solve_membership(p);
  CHECK(r.member);
  CHECK(r.certificate == std::vector<BigRational>{1, 0, 0});
  CHECK(r.verify(p));
}

TEST_CASE("non-members return a reproducible residual") {
  IdealMembershipProblem p{3, {vec({{0, 1}, {1, 1}}), vec({{1, 1}, {2, 1}})}, vec({{0, 1}, {1, -1}, {2, 1}})};
  auto r1 = solve_membership(p);
  auto r2 = solve_membership(p);
  CHECK_FALSE(r1.member);
  CHECK_FALSE(r1.residual.is_zero());
  CHECK(r1.residual == r2.residual);
  CHECK(r1.verify(p));
}

TEST_CASE("echelon rank matches dense elimination on random systems") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    std::vector<std::vector<BigRational>> dense(rows, std::vector<BigRational>(cols, 0));
    EchelonBasis e(true);
    std::vector<SparseVector> gens;
    for (std::size_t i = 0; i < rows; ++i) {
      SparseVector v;
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 2) {
          BigRational c(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
          c.canonicalize();
          dense[i][j] = c;
          v.add(j, c);
        }
      v.normalize();
      e.insert(v);
      gens.push_back(v);
    }
    CHECK(e.rank() == oracle::rank(dense));
    // random combinations of the generators are members with recombining certificates
    SparseVector q;
    for (const auto& g : gens) q = axpy(q, BigRational(static_cast<long>(rng() % 5) - 2), g);
    auto red = e.reduce(q);
    CHECK(red.residual.is_zero());
    SparseVector acc;
    for (const auto& [g, c] : red.certificate) acc = axpy(acc, c, gens.at(g));
    CHECK(acc == q);
  }
}

TEST_CASE("from_big rejects values outside 64 bits") {
  BigRational big("123456789012345678901234567890");
  CHECK_THROWS(from_big(big));
  CHECK(from_big(BigRational(3, 4)) == Rational(3, 4));
}
