// Serial reference vs OpenMP paths of the trial runner and the FD Jacobians.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "fflab/jacobian.hpp"
#include "fflab/verify.hpp"

using namespace fflab;

namespace {

Exec mode(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

TrialConfig config(int n, int trials) {
  TrialConfig c;
  c.n = n;
  c.trials = trials;
  c.seed = 3;
  return c;
}

void BM_Stam(benchmark::State& s) {
  const TrialConfig c = config(static_cast<int>(s.range(0)), 200);
  for (auto _ : s) benchmark::DoNotOptimize(check_stam(c, mode(s)).min_margin);
  s.SetItemsProcessed(s.iterations() * c.trials);
}

void BM_Structure(benchmark::State& s) {
  const TrialConfig c = config(static_cast<int>(s.range(0)), 20);
  for (auto _ : s) benchmark::DoNotOptimize(check_structure(c, mode(s)).min_margin);
  s.SetItemsProcessed(s.iterations() * c.trials);
}

void BM_EntropyIntegral(benchmark::State& s) {
  const TrialConfig c = config(static_cast<int>(s.range(0)), 8);
  for (auto _ : s) benchmark::DoNotOptimize(check_entropy_integral(c, 100.0, 1005, mode(s)).min_margin);
  s.SetItemsProcessed(s.iterations() * c.trials);
}

void BM_ConvJacobian(benchmark::State& s) {
  const TrialConfig c = config(static_cast<int>(s.range(0)), 2);
  const RootVector a = *sample_roots(c, 0, 0), b = *sample_roots(c, 0, 1);
  for (auto _ : s) benchmark::DoNotOptimize(jacobian_conv_fd(a, b, kDefaultFdStep, mode(s)).data().data());
}

}  // namespace

// Second argument: 0 serial, 1 parallel.
BENCHMARK(BM_Stam)->ArgsProduct({{10, 25}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Structure)->ArgsProduct({{8, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EntropyIntegral)->ArgsProduct({{5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvJacobian)->ArgsProduct({{16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
