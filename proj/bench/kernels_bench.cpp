// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "scg/kernels.hpp"

namespace {

using namespace scg;

void outcome_scan(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const Game game(n, 4, CostFunction::polynomial({0, 0, 1}, n));
  for (auto _ : state) {
    auto scan = parallel ? kernels::scan_outcomes_parallel(game) : kernels::scan_outcomes_serial(game);
    benchmark::DoNotOptimize(scan);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(*checked_power(4, n, 1u << 30)));
}

void agreement_sweep(benchmark::State& state, bool parallel) {
  const int size = static_cast<int>(state.range(0));
  const EffectiveCost g(CostFunction::exponential(2, 1, size));
  for (auto _ : state) {
    auto sweep = parallel ? kernels::sweep_agreements_parallel(size, 3, g) : kernels::sweep_agreements_serial(size, 3, g);
    benchmark::DoNotOptimize(sweep);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(*checked_power(3, size, 1u << 30)));
}

void mnp_scan(benchmark::State& state, bool parallel) {
  std::vector<int> weights;
  for (int k = 0; k < state.range(0); ++k) weights.push_back(1 + (7 * k) % 11);
  for (auto _ : state) {
    auto scan = parallel ? kernels::scan_mnp_parallel(weights, 3, MnpObjective::min_var)
                         : kernels::scan_mnp_serial(weights, 3, MnpObjective::min_var);
    benchmark::DoNotOptimize(scan);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(*checked_power(3, state.range(0), 1u << 30)));
}

BENCHMARK_CAPTURE(outcome_scan, serial, false)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(outcome_scan, parallel, true)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(agreement_sweep, serial, false)->DenseRange(4, 7, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(agreement_sweep, parallel, true)->DenseRange(4, 7, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mnp_scan, serial, false)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mnp_scan, parallel, true)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
