#include <benchmark/benchmark.h>

#include "minrank/experiment.hpp"
#include "minrank/graph.hpp"
#include "minrank/sah.hpp"

using namespace minrank;

namespace {

ExperimentConfig sweep() {
  ExperimentConfig cfg;
  cfg.v_grid = {100, 200};
  cfg.p_grid = {0.25, 0.5, 0.75};
  cfg.trials = 8;
  cfg.seed = 1;
  return cfg;
}

void BM_experiment_serial(benchmark::State& state) {
  const auto cfg = sweep();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(cfg));
}

void BM_experiment_parallel(benchmark::State& state) {
  const auto cfg = sweep();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_parallel(cfg));
}

void xi_search(benchmark::State& state, ExecPolicy policy) {
  const auto g = sample_gnp({static_cast<int>(state.range(0)), 0.5, 3});
  XiSearchOptions opts;
  opts.trials = 16;
  opts.policy = policy;
  for (auto _ : state) benchmark::DoNotOptimize(xi_certificate_search(g, opts));
}

void BM_xi_search_serial(benchmark::State& state) { xi_search(state, ExecPolicy::serial); }
void BM_xi_search_parallel(benchmark::State& state) { xi_search(state, ExecPolicy::parallel); }

}  // namespace

BENCHMARK(BM_experiment_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_experiment_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_xi_search_serial)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_xi_search_parallel)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
