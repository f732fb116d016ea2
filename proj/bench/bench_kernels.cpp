#include <benchmark/benchmark.h>

#include "jwent/diag.hpp"
#include "jwent/ensemble.hpp"
#include "jwent/experiment.hpp"
#include "jwent/measures.hpp"

using namespace jwent;

namespace {

// Arg 0: serial, 1: parallel.
Execution exec_of(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

CouplingSet chain(int n) {
  CouplingSet c = CouplingSet::uniform(n, 1.0, 0.0);
  for (int b = 0; b < n - 1; ++b) {
    c.j_xy[b] = 0.5 + 0.1 * (b % 4);
    c.j_z[b] = -0.7 + 0.3 * (b % 5);
  }
  return c;
}

void BM_BuildSpin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const CouplingSet c = chain(n);
  auto basis = make_basis(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_xxz_spin(c, basis, exec_of(state)));
  state.counters["dim"] = static_cast<double>(basis->size());
}
BENCHMARK(BM_BuildSpin)->ArgsProduct({{0, 1}, {10, 12, 14}})->Unit(benchmark::kMillisecond);

void BM_BuildFermion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const CouplingSet c = chain(n);
  auto basis = make_basis(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_tb_fermion(c, basis, exec_of(state)));
}
BENCHMARK(BM_BuildFermion)->ArgsProduct({{0, 1}, {10, 12, 14}})->Unit(benchmark::kMillisecond);

void BM_MeasureAllPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  GroundStateOptions opts;
  opts.n_up = n / 2;
  const StateVector psi = ground_state(spin_builder(), chain(n), opts).state;
  const auto pairs = all_pairs(n);
  for (auto _ : state) benchmark::DoNotOptimize(measure_pairs(psi, pairs, exec_of(state)));
}
BENCHMARK(BM_MeasureAllPairs)->ArgsProduct({{0, 1}, {10, 12}})->Unit(benchmark::kMillisecond);

void BM_GroundStateAuto(benchmark::State& state) {
  GroundStateOptions opts;
  opts.exec = exec_of(state);
  const CouplingSet c = chain(10);
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(spin_builder(), c, opts));
}
BENCHMARK(BM_GroundStateAuto)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Ensemble(benchmark::State& state) {
  EnsembleSpec spec;
  spec.draws = 20;
  for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(spec, spin_builder(), fermion_builder(), exec_of(state)));
}
BENCHMARK(BM_Ensemble)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  ExperimentConfig c;
  c.n = 10;
  c.couplings = chain(10);
  c.sector = 5;
  for (int k = 0; k < 16; ++k) c.grid.push_back(-2.0 + 0.25 * k);
  for (auto _ : state) benchmark::DoNotOptimize(cmd_sweep(c, exec_of(state)));
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
