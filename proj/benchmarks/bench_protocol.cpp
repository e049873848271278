#include <benchmark/benchmark.h>

#include "databus/ghz.hpp"
#include "databus/protocol.hpp"
#include "databus/stabilizer_tableau.hpp"

namespace {

using namespace databus;

void BM_PrepareGhz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  BusSpec bus;
  for (std::size_t i = 0; i < n; ++i) bus.data_qubits.push_back(i);
  for (std::size_t i = 0; i + 1 < n; ++i) bus.syndrome_qubits.push_back(n + i);
  bus.segments = {{0, n, SegmentBasis::Z}};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    StabilizerTableau t(2 * n - 1, seed++);
    prepare_ghz(t, bus);
    benchmark::DoNotOptimize(t.stabilizers().data());
  }
}
BENCHMARK(BM_PrepareGhz)->Arg(8)->Arg(32)->Arg(128);

void BM_JointParity(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::vector<PatchRequest> req{{d, false, LogicalBasis::X}, {d, true, LogicalBasis::Z}};
  const auto setup = make_setup(req);
  const std::vector<int> eig{1, -1};
  ParityOptions opt;
  opt.noise.p_phys = 0.01;
  for (auto _ : state) {
    ++opt.noise.seed;
    benchmark::DoNotOptimize(joint_parity(setup, eig, opt).parity);
  }
}
BENCHMARK(BM_JointParity)->Arg(2)->Arg(3)->Arg(5);

}  // namespace
