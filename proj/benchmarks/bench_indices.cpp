#include <benchmark/benchmark.h>

#include "catlab/caterpillar.hpp"
#include "catlab/indices.hpp"
#include "catlab/oracle.hpp"

namespace {

catlab::caterpillar make_state(std::int64_t m, std::int64_t n) {
  return catlab::simulate(m, n, {1, 0});
}

void BM_Wiener(benchmark::State& state) {
  const auto c = make_state(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(catlab::wiener(c));
}
BENCHMARK(BM_Wiener)->Args({50, 2000})->Args({200, 5000})->Args({1000, 1'000'000});

void BM_HyperWiener(benchmark::State& state) {
  const auto c = make_state(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(catlab::hyper_wiener(c));
}
BENCHMARK(BM_HyperWiener)->Args({50, 2000})->Args({1000, 1'000'000});

void BM_WienerBfs(benchmark::State& state) {
  const auto g = catlab::to_adjacency(make_state(state.range(0), state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(catlab::oracle::wiener_bfs(g));
}
BENCHMARK(BM_WienerBfs)->Args({10, 200})->Args({50, 1000});

void BM_Zagreb(benchmark::State& state) {
  const auto c = make_state(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(catlab::zagreb(c));
}
BENCHMARK(BM_Zagreb)->Args({200, 5000});

void BM_RandicAlpha(benchmark::State& state) {
  const auto c = make_state(200, 5000);
  for (auto _ : state) benchmark::DoNotOptimize(catlab::randic(c, -0.5));
}
BENCHMARK(BM_RandicAlpha);

void BM_DegreeGini(benchmark::State& state) {
  const auto c = make_state(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(catlab::degree_gini(c));
}
BENCHMARK(BM_DegreeGini)->Args({200, 5000});

}  // namespace
