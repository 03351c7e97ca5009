#include <benchmark/benchmark.h>

#include <memory>
#include <string>

#include "nqr/necklace.hpp"
#include "nqr/parse.hpp"
#include "nqr/quiver.hpp"
#include "nqr/schedler.hpp"
#include "nqr/trace.hpp"
#include "nqr/verify.hpp"
#include "nqr/weyl.hpp"

namespace {

std::shared_ptr<const nqr::Quiver> doubled(const char* name) {
  return std::make_shared<const nqr::Quiver>(nqr::builtin_quiver(name)->doubled());
}

void BM_NecklaceBracket(benchmark::State& state) {
  auto q = doubled("jordan");
  auto necks = nqr::enumerate_necklaces(*q, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& x : necks)
      for (const auto& y : necks) benchmark::DoNotOptimize(nqr::necklace_bracket(*q, x, y));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(necks.size() * necks.size()));
}
BENCHMARK(BM_NecklaceBracket)->Arg(3)->Arg(4);

void BM_RewriteToPbw(benchmark::State& state) {
  auto q = doubled("jordan");
  nqr::SchedlerAlgebra alg(q, nqr::SkeinConvention{});
  auto monos = nqr::letter_monomials(*q, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& m : monos) benchmark::DoNotOptimize(alg.rewrite_to_pbw(m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(monos.size()));
}
BENCHMARK(BM_RewriteToPbw)->Arg(3)->Arg(4);

void BM_QuantumTrace(benchmark::State& state) {
  auto q = doubled("jordan");
  nqr::TraceContext ctx(q, nqr::DimVector({static_cast<int>(state.range(0))}), nqr::SkeinConvention{});
  auto monos = nqr::letter_monomials(*q, 4);
  for (auto _ : state)
    for (const auto& m : monos) benchmark::DoNotOptimize(nqr::quantum_trace(ctx, m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(monos.size()));
}
BENCHMARK(BM_QuantumTrace)->Arg(1)->Arg(2)->Arg(3);

void BM_WeylMul(benchmark::State& state) {
  auto q = doubled("jordan");
  nqr::TraceContext ctx(q, nqr::DimVector({2}), nqr::SkeinConvention{});
  auto x = nqr::quantum_trace(ctx, nqr::parse_height_sum("h[(a,1),(a*,2),(a,3)]", *q).begin()->first);
  auto y = nqr::quantum_trace(ctx, nqr::parse_height_sum("h[(a*,1),(a,2),(a*,3)]", *q).begin()->first);
  for (auto _ : state) benchmark::DoNotOptimize(nqr::weyl_mul(x, y));
}
BENCHMARK(BM_WeylMul);

void BM_VerifyFace(benchmark::State& state) {
  auto q = doubled("jordan");
  auto face = static_cast<nqr::Face>(state.range(0));
  for (auto _ : state) {
    nqr::Verifier v(q, nqr::DimVector({2}), nqr::SkeinConvention{}, nqr::VerifyOptions{});
    benchmark::DoNotOptimize(v.run(face));
  }
  state.SetLabel(std::string(nqr::face_id(face)));
}
BENCHMARK(BM_VerifyFace)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
