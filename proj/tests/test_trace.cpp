#include <doctest.h>

#include <fmt/format.h>

#include "helpers.hpp"
#include "nqr/trace.hpp"
#include "nqr/verify.hpp"
#include "oracle.hpp"

using namespace nqr;
using testing::doubled;
using testing::neck;

namespace {

TraceContext context(const std::string& quiver, const std::string& dim) {
  return TraceContext(doubled(quiver), DimVector::parse(dim), SkeinConvention{});
}

HeightSum hs(const TraceContext& ctx, const std::string& s) { return parse_height_sum(s, *ctx.quiver); }

const std::pair<const char*, const char*> kSpaces[] = {{"jordan", "1"}, {"jordan", "2"}, {"a2", "1,1"}, {"a2", "2,1"}};

}  // namespace

TEST_CASE("classical trace examples") {
  auto ctx = context("jordan", "2");
  const Quiver& q = *ctx.quiver;
  CHECK(classical_trace(ctx, neck(q, "cyc(a)")) == parse_poly("x[a][1][1] + x[a][2][2]", ctx.coords));
  CHECK(classical_trace(ctx, neck(q, "e(v)")) == poly_constant(ctx.coords, 2));
  CHECK(classical_trace(ctx, neck(q, "cyc(a,a*)")) ==
        parse_poly("x[a][1][1]*x[a*][1][1] + x[a][1][2]*x[a*][2][1] + x[a][2][1]*x[a*][1][2] + "
                   "x[a][2][2]*x[a*][2][2]",
                   ctx.coords));
  auto a2 = context("a2", "2,1");
  CHECK(classical_trace(a2, neck(*a2.quiver, "e(v1)")) == poly_constant(a2.coords, 2));
  CHECK(classical_trace(a2, neck(*a2.quiver, "e(v2)")) == poly_constant(a2.coords, 1));
}

TEST_CASE("classical trace is the trace of the matrix product") {
  for (auto [name, dim] : kSpaces) {
    auto ctx = context(name, dim);
    for (const auto& n : enumerate_necklaces(*ctx.quiver, 4))
      CHECK(oracle::from_library(classical_trace(ctx, n), ctx.coords.variable_count()) ==
            oracle::matrix_trace(ctx.coords, n));
  }
}

TEST_CASE("quantum trace examples") {
  for (int n = 1; n <= 3; ++n) {
    auto ctx = context("jordan", std::to_string(n));
    CHECK(quantum_trace(ctx, hs(ctx, "e(v)")) == weyl_constant(ctx.coords, n));
    auto euler = quantum_trace(ctx, hs(ctx, "h[(a,1),(a*,2)]"));
    WeylSum expected;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        expected += parse_weyl(fmt::format("x[a][{}][{}]*D[a][{}][{}]", i, j, i, j), ctx.coords);
    CHECK(euler == expected);
    auto defect = quantum_trace(ctx, hs(ctx, "h[(a*,1),(a,2)]")) - euler;
    CHECK(defect == weyl_constant(ctx.coords, HbarPoly::monomial(n * n, 1)));
  }
}

TEST_CASE("quantum trace matches composition of operators") {
  for (auto [name, dim] : kSpaces) {
    auto ctx = context(name, dim);
    SchedlerAlgebra alg(ctx.quiver, ctx.convention);
    std::vector<HeightMonomial> monos = alg.pbw_basis(3);
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& m : letter_monomials(*ctx.quiver, n)) monos.push_back(m);
    for (const auto& m : monos) {
      auto lib = quantum_trace(ctx, m);
      for (const oracle::Q& h : {oracle::Q(0), oracle::Q(2), oracle::Q(-1, 3)})
        for (const auto& f : oracle::test_functions(ctx.coords.variable_count(), 2))
          CHECK(oracle::apply(lib, f, h) == oracle::quantum_trace_action(ctx.coords, m, f, h));
    }
  }
}

TEST_CASE("quantum trace is independent of the representative") {
  for (auto [name, dim] : kSpaces) {
    auto ctx = context(name, dim);
    SchedlerAlgebra alg(ctx.quiver, ctx.convention);
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& m : letter_monomials(*ctx.quiver, n))
        CHECK(quantum_trace(ctx, m) == quantum_trace(ctx, alg.rewrite_to_pbw(m)));
    CHECK(quantum_trace(ctx, hs(ctx, "h[(a,3),(a*,7)]")) == quantum_trace(ctx, hs(ctx, "h[(a,1),(a*,2)]")));
  }
}

TEST_CASE("trace accumulator sums quantum traces") {
  auto ctx = context("jordan", "2");
  TraceAccumulator acc(ctx);
  auto m1 = hs(ctx, "h[(a*,1),(a,2)]").begin()->first;
  auto m2 = hs(ctx, "h[(a,1),(a*,2)]").begin()->first;
  auto e = hs(ctx, "e(v) & e(v)").begin()->first;
  acc.add(m1, Rational(1));
  acc.add(m2, Rational(-1));
  CHECK_FALSE(acc.is_zero());
  acc.add(e, Rational(-1), 1);
  CHECK(acc.is_zero());
  acc.clear();
  acc.add(m1, Rational(2), 1);
  auto expected = quantum_trace(ctx, m1);
  expected *= HbarPoly::monomial(2, 1);
  CHECK(acc.value() == expected);
}

TEST_CASE("symbol map") {
  auto ctx = context("jordan", "1");
  CHECK(phi(parse_weyl("x[a][1][1]*D[a][1][1] + hbar", ctx.coords)) ==
        parse_poly("x[a][1][1]*x[a*][1][1]", ctx.coords));
  for (auto [name, dim] : kSpaces) {
    auto c = context(name, dim);
    SchedlerAlgebra alg(c.quiver, c.convention);
    for (const auto& n : enumerate_necklaces(*c.quiver, 4))
      CHECK(phi(quantum_trace(c, alg.lift(n))) == classical_trace(c, n));
  }
}

TEST_CASE("quantum moment map identity") {
  for (auto [name, dim] : kSpaces) {
    auto ctx = context(name, dim);
    for (const auto& e : quantum_moment_check(ctx)) {
      CHECK(e.equal);
      CHECK(e.lhs == e.rhs);
      auto chi = chi0(ctx.coords);
      CHECK(e.rhs == tau(ctx.coords, e.xi) - weyl_constant(ctx.coords, HbarPoly::monomial(chi(e.xi), 1)));
    }
  }
  auto none = std::make_shared<const Quiver>(Quiver("pt", {"v"}, {}).doubled());
  TraceContext pt(none, DimVector({2}), SkeinConvention{});
  for (const auto& e : quantum_moment_check(pt)) {
    CHECK(e.lhs.is_zero());
    CHECK(e.rhs.is_zero());
  }
}

TEST_CASE("the transposed character fails the moment identity") {
  auto ctx = context("a2", "2,3");
  Character transposed{{Rational(-3), Rational(0)}};
  bool any_failure = false;
  for (const auto& e : quantum_moment_check(ctx)) {
    auto alt = tau(ctx.coords, e.xi) - weyl_constant(ctx.coords, HbarPoly::monomial(transposed(e.xi), 1));
    if (!(alt == e.lhs)) any_failure = true;
  }
  CHECK(any_failure);
}

TEST_CASE("quantum traces are gl invariant") {
  for (auto [name, dim] : kSpaces) {
    auto ctx = context(name, dim);
    SchedlerAlgebra alg(ctx.quiver, ctx.convention);
    for (const auto& m : alg.pbw_basis(3)) {
      auto t = quantum_trace(ctx, m);
      for (const auto& xi : gl_basis(ctx.coords)) CHECK(weyl_commutator(tau(ctx.coords, xi), t).is_zero());
    }
  }
}

TEST_CASE("classical trace intertwines the brackets up to the pairing sign") {
  // {a, a*} = e_v while {x*, x} = 1 forces Tr{x, y} = -{Tr x, Tr y}
  for (auto [name, dim] : kSpaces) {
    auto ctx = context(name, dim);
    auto all = enumerate_necklaces(*ctx.quiver, 3);
    for (const auto& x : all)
      for (const auto& y : all)
        CHECK(classical_trace(ctx, necklace_bracket(*ctx.quiver, x, y)) ==
              -poisson(classical_trace(ctx, x), classical_trace(ctx, y)));
  }
}

TEST_CASE("quantization commutes with the trace maps") {
  for (auto [name, dim] : kSpaces) {
    auto ctx = context(name, dim);
    SchedlerAlgebra alg(ctx.quiver, ctx.convention);
    auto r = check_quantization(alg, ctx, 3, false, false);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
  for (int n = 1; n <= 3; ++n) {
    auto ctx = context("jordan", std::to_string(n));
    SchedlerAlgebra alg(ctx.quiver, ctx.convention);
    auto comm = alg.commutator(alg.lift(neck(*ctx.quiver, "cyc(a)")), alg.lift(neck(*ctx.quiver, "cyc(a*)")));
    CHECK(quantum_trace(ctx, comm) == weyl_constant(ctx.coords, HbarPoly::monomial(-n, 1)));
  }
}
