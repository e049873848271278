#include <benchmark/benchmark.h>

#include "databus/presets.hpp"
#include "databus/tradeoff.hpp"

namespace {

using namespace databus;

void BM_EstimatePreset(benchmark::State& state) {
  const auto& prof = find_preset("shor4096").profile;
  for (auto _ : state) benchmark::DoNotOptimize(estimate(prof));
}
BENCHMARK(BM_EstimatePreset);

void BM_Sweep(benchmark::State& state) {
  const auto& prof = find_preset("q100").profile;
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(prof, 0.1, 10.0, steps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(50)->Arg(500);

}  // namespace
