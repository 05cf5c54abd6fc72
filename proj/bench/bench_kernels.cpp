// Serial reference vs OpenMP kernel, pairwise. Thread count follows
// OMP_NUM_THREADS.

#include "hamming/asymptotics.hpp"
#include "hamming/oracle.hpp"
#include "hamming/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hamming;

std::vector<int> all_modes(const GraphParams& g) {
  std::vector<int> ks;
  for (int k = 0; k <= g.d; ++k) ks.push_back(k);
  return ks;
}

template <bool Parallel>
void BM_WeightProjectors(benchmark::State& state) {
  const GraphParams g(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto ks = all_modes(g);
  for (auto _ : state) {
    auto p = Parallel ? weight_projectors(g, ks) : weight_projectors_serial(g, ks);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_WeightProjectors<false>)->Args({8, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightProjectors<true>)->Args({8, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_CertifySweep(benchmark::State& state) {
  CertifyPlan plan;
  plan.cap = static_cast<std::size_t>(state.range(0));
  plan.d1_full_q_max = 16;
  plan.d1_tail_q.clear();
  plan.random_noncontiguous = 20;
  const auto instances = plan_instances(plan);
  for (auto _ : state) {
    auto s = Parallel ? certify_sweep(instances) : certify_sweep_serial(instances);
    benchmark::DoNotOptimize(s.failures);
  }
  state.counters["instances"] = static_cast<double>(instances.size());
}
BENCHMARK(BM_CertifySweep<false>)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifySweep<true>)->Arg(64)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_ScalingSamples(benchmark::State& state) {
  const FitGrid grid;
  for (auto _ : state) {
    auto s = Parallel ? scaling_samples(grid) : scaling_samples_serial(grid);
    benchmark::DoNotOptimize(s.data());
  }
}
BENCHMARK(BM_ScalingSamples<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScalingSamples<true>)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.measure = Measure::mutual;
  cfg.half_filling = true;
  for (int d = 60; d <= 600; d += 60) cfg.d.push_back(d);
  cfg.q = {3, 4, 5};
  cfg.r = {5, 10, 20, 40};
  for (auto _ : state) {
    auto rows = Parallel ? run_sweep(cfg) : run_sweep_serial(cfg);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_Sweep<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<true>)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
