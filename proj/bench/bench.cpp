// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "dlchar/unipotent.hpp"
#include "dlchar/weyl.hpp"

using namespace dlchar;

namespace {

const char* kTypes[] = {"F4", "E6", "D6", "E7"};

weyl::CartanType type_arg(const benchmark::State& st) { return weyl::CartanType::parse(kTypes[st.range(0)]); }

void BM_EnumerateSerial(benchmark::State& st) {
  const weyl::WeylGroup g(type_arg(st));
  for (auto _ : st) benchmark::DoNotOptimize(weyl::serial::enumerate(g, {.keep_elements = false}));
  st.SetLabel(kTypes[st.range(0)]);
}

void BM_EnumerateParallel(benchmark::State& st) {
  const weyl::WeylGroup g(type_arg(st));
  for (auto _ : st) benchmark::DoNotOptimize(weyl::parallel::enumerate(g, {.keep_elements = false}));
  st.SetLabel(kTypes[st.range(0)]);
}

void BM_ClassLabelsSerial(benchmark::State& st) {
  const weyl::WeylGroup g(type_arg(st));
  const auto store = weyl::parallel::enumerate(g);
  for (auto _ : st) benchmark::DoNotOptimize(weyl::serial::class_labels(g, store, g.sigma()));
  st.SetLabel(kTypes[st.range(0)]);
}

void BM_ClassLabelsParallel(benchmark::State& st) {
  const weyl::WeylGroup g(type_arg(st));
  const auto store = weyl::parallel::enumerate(g);
  for (auto _ : st) benchmark::DoNotOptimize(weyl::parallel::class_labels(g, store, g.sigma()));
  st.SetLabel(kTypes[st.range(0)]);
}

const char* kCensus[] = {"E6", "E7", "E8"};

void BM_CensusSerial(benchmark::State& st) {
  const auto t = weyl::CartanType::parse(kCensus[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(unipotent::serial::series_breakdown(t));
  st.SetLabel(kCensus[st.range(0)]);
}

void BM_CensusParallel(benchmark::State& st) {
  const auto t = weyl::CartanType::parse(kCensus[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(unipotent::parallel::series_breakdown(t));
  st.SetLabel(kCensus[st.range(0)]);
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassLabelsSerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassLabelsParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CensusSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
