#include <benchmark/benchmark.h>

#include "fuzzydist/coherent_states.hpp"
#include "fuzzydist/connes_distance.hpp"
#include "fuzzydist/quantum_space.hpp"

using namespace fuzzydist;

namespace {

HalfInteger spin(const benchmark::State& st) { return HalfInteger::from_twice(st.range(0)); }

void BM_DiracEigenvalues(benchmark::State& st) {
  auto t = build_dirac(build_space(spin(st), 1.0), Representation::config);
  for (auto _ : st) benchmark::DoNotOptimize(hermitian_eigvals(t.dirac));
}
BENCHMARK(BM_DiracEigenvalues)->Arg(2)->Arg(8)->Arg(16)->Arg(32);

void BM_LipschitzSeminorm(benchmark::State& st) {
  auto t = build_dirac(build_space(spin(st), 1.0), Representation::config);
  auto d = adjacent_drho(t.sphere, spin(st).is_integer() ? HalfInteger{} : -kHalf);
  for (auto _ : st) benchmark::DoNotOptimize(lipschitz_seminorm(t, d));
}
BENCHMARK(BM_LipschitzSeminorm)->Arg(2)->Arg(8)->Arg(16)->Arg(32);

void BM_OptimizerAdjacent(benchmark::State& st) {
  const HalfInteger n = spin(st);
  auto s = build_space(n, 1.0);
  auto t = build_dirac(s, Representation::config);
  OptimizerOptions o;
  o.random_starts = 2;
  for (auto _ : st) benchmark::DoNotOptimize(connes_distance_optimized(t, pure_state(s, -n), pure_state(s, -n + kOne), o));
}
BENCHMARK(BM_OptimizerAdjacent)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CoherentDifferenceQuotient(benchmark::State& st) {
  auto s = build_space(spin(st), 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(coherent_metric_numeric(s, Complex(0.3, 0.4), 1e-4));
}
BENCHMARK(BM_CoherentDifferenceQuotient)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_QuantumSeminormOracle(benchmark::State& st) {
  const HalfInteger n = spin(st);
  for (auto _ : st) benchmark::DoNotOptimize(quantum_seminorm_oracle(n, 1.0, -n, n, -n));
}
BENCHMARK(BM_QuantumSeminormOracle)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PathMinimization(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(minimize_path_distance(kOne, 1.0, -kOne, kOne, 4, 42));
}
BENCHMARK(BM_PathMinimization)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
