#include <benchmark/benchmark.h>

#include "catlab/caterpillar.hpp"
#include "catlab/experiments.hpp"

namespace {

void BM_SimulateSequential(benchmark::State& state) {
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(catlab::simulate(state.range(0), state.range(1), {7, stream++}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_SimulateSequential)->Args({200, 5000})->Args({10, 100'000});

void BM_SampleDirect(benchmark::State& state) {
  std::uint64_t stream = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(catlab::sample_direct(state.range(0), state.range(1), {7, stream++}));
  }
}
BENCHMARK(BM_SampleDirect)->Args({200, 5000})->Args({10, 100'000})->Args({1000, 1'000'000});

void BM_RunMc(benchmark::State& state) {
  catlab::experiment_config cfg;
  cfg.m = 200;
  cfg.n = 5000;
  cfg.replications = 500;
  cfg.seed = 42;
  cfg.threads = static_cast<unsigned>(state.range(0));
  cfg.indices = {{catlab::index_kind::hoover}, {catlab::index_kind::zagreb},
                 {catlab::index_kind::randic}, {catlab::index_kind::wiener},
                 {catlab::index_kind::hyper_wiener}};
  for (auto _ : state) benchmark::DoNotOptimize(catlab::run_mc(cfg));
}
BENCHMARK(BM_RunMc)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
