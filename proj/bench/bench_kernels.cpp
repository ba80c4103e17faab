#include <benchmark/benchmark.h>

#include "dkern/digraph.hpp"
#include "dkern/enumeration.hpp"
#include "dkern/kernels.hpp"
#include "dkern/suites.hpp"

namespace {

dkern::Digraph sample(int n) { return dkern::random_digraph(n, {0.4, 0.25, 0.25, 0.1}, 12345); }

void BM_TableSerial(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkern::kernel_table_serial(d));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_TableParallel(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkern::kernel_table_parallel(d));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_FullCirculantStatus(benchmark::State& state) {
  const auto d = dkern::full_circulant(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkern::kernel_status(d, dkern::kMaxStatusCap));
}

void BM_SuiteFastVsOracle(benchmark::State& state) {
  dkern::SuiteParams p;
  p.general_n = 4;
  p.asym_n = 4;
  p.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(dkern::run_suite(dkern::SuiteKind::FastVsOracle, p));
}

}  // namespace

BENCHMARK(BM_TableSerial)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullCirculantStatus)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteFastVsOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
