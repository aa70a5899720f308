// Serial reference vs OpenMP kernels. Thread count follows FLAGX_THREADS.

#include <benchmark/benchmark.h>

#include "flagx/algebra.hpp"
#include "flagx/extremality.hpp"
#include "flagx/su3.hpp"

namespace {

using namespace flagx;

const AlgebraRealization& so10() {
  static const AlgebraRealization alg = build_algebra(Family::D, 5);
  return alg;
}

void BM_KillingSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(killing_gram_from_structure_serial(so10()));
}
void BM_KillingParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(killing_gram_from_structure(so10()));
}

const std::vector<SurveyRange> kRanges{{Family::A, 2, 9}, {Family::B, 2, 8}, {Family::C, 3, 8}, {Family::D, 3, 8}};

void BM_SurveySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(survey_full_flags_serial(kRanges));
}
void BM_SurveyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(survey_full_flags(kRanges));
}

void BM_ScanSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su3::lambda1_scan_serial(n, 0.05, 2.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
void BM_ScanParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su3::lambda1_scan(n, 0.05, 2.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_KillingSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KillingParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SurveySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurveyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanSerial)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
