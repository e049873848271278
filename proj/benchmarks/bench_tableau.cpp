#include <benchmark/benchmark.h>

#include <random>

#include "databus/stabilizer_group.hpp"
#include "databus/stabilizer_tableau.hpp"

namespace {

using namespace databus;

void BM_CnotLayer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  StabilizerTableau t(n, 1);
  for (std::size_t q = 0; q < n; q += 2) t.apply_h(q);
  for (auto _ : state) {
    for (std::size_t q = 0; q + 1 < n; ++q) t.apply_cnot(q, q + 1);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n - 1));
}
BENCHMARK(BM_CnotLayer)->Arg(16)->Arg(64)->Arg(256);

void BM_RandomMeasurement(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  StabilizerTableau t(n, 2);
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    const auto q = rng() % n;
    t.apply_h(q);
    benchmark::DoNotOptimize(t.measure(PauliString::single(n, q, Pauli::Z)));
  }
}
BENCHMARK(BM_RandomMeasurement)->Arg(16)->Arg(64)->Arg(256);

void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  StabilizerTableau t(n, 4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 4 * static_cast<int>(n); ++i) {
    const auto a = rng() % n;
    if (rng() % 2) {
      t.apply_h(a);
    } else {
      t.apply_cnot(a, (a + 1) % n);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t.stabilizers()));
}
BENCHMARK(BM_CanonicalForm)->Arg(16)->Arg(64);

}  // namespace
