#include <benchmark/benchmark.h>

#include "eqpos/bsdh.hpp"

using namespace eqpos;

namespace {

BsdhVariety a3_longest() { return BsdhVariety::build(RootSystem::build("A3"), {0, 1, 0, 2, 1, 0}); }

void BM_BasisDegrees(benchmark::State& state) {
  const auto z = a3_longest();
  const auto curves = model_curves(z);
  for (auto _ : state)
    for (const auto& c : curves) benchmark::DoNotOptimize(basis_degrees(z, c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(curves.size()));
}
BENCHMARK(BM_BasisDegrees);

void BM_NefTest(benchmark::State& state) {
  const auto z = a3_longest();
  const auto e = BundleExpr::line(PicClass{{1, 1, 1, 1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(nef_test(z, e));
}
BENCHMARK(BM_NefTest);

void BM_YCurves(benchmark::State& state) {
  Word w{0, 1, 0};
  w.resize(static_cast<std::size_t>(state.range(0)));
  const auto z = BsdhVariety::build(RootSystem::build("A2"), w);
  for (auto _ : state) benchmark::DoNotOptimize(count_y_curves(z));
}
BENCHMARK(BM_YCurves)->DenseRange(1, 3);

void BM_SymRestrict(benchmark::State& state) {
  std::map<std::string, SplitType, std::less<>> entries{{"c", SplitType({0, 1, 2, 3})}};
  const auto e = BundleExpr::sym(static_cast<int>(state.range(0)), BundleExpr::table(entries));
  for (auto _ : state) benchmark::DoNotOptimize(restrict(e, "c", nullptr));
}
BENCHMARK(BM_SymRestrict)->DenseRange(2, 10, 4);

void BM_GkmCheck(benchmark::State& state) {
  const auto z = a3_longest();
  for (auto _ : state) benchmark::DoNotOptimize(gkm_check(z));
}
BENCHMARK(BM_GkmCheck);

}  // namespace

BENCHMARK_MAIN();
