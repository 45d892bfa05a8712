#include "oracles.hpp"

#include <benchmark/benchmark.h>

using namespace miv;

namespace {

void BM_RecognizeSsw(benchmark::State& state) {
  test::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = static_cast<std::size_t>(state.range(1));
  const auto p = test::plant_ssw(rng, n, t, false, true).profile;
  for (auto _ : state) benchmark::DoNotOptimize(recognize_ssw(p));
  state.SetComplexityN(state.range(0) * state.range(1));
}
BENCHMARK(BM_RecognizeSsw)->Args({100, 10})->Args({1000, 50})->Args({4000, 100})->Complexity();

void BM_FastFinder(benchmark::State& state) {
  test::Rng rng(2);
  const auto p = test::random_profile(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  benchmark::DoNotOptimize(forbidden_catalogue());  // built once on first use
  for (auto _ : state) benchmark::DoNotOptimize(find_forbidden_fast(p));
}
BENCHMARK(BM_FastFinder)->Args({100, 10})->Args({1000, 50});

void BM_FindCondorcet(benchmark::State& state) {
  test::Rng rng(3);
  const auto inst = test::random_external(rng, 9, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_condorcet(inst));
}
BENCHMARK(BM_FindCondorcet)->DenseRange(8, 16, 4);

void BM_RelevantTopics(benchmark::State& state) {
  test::Rng rng(4);
  const auto w = test::random_weights(rng, static_cast<std::size_t>(state.range(0)), 40);
  const auto engine = state.range(1) ? RelevanceEngine::Knapsack : RelevanceEngine::BruteForce;
  for (auto _ : state) benchmark::DoNotOptimize(relevant_topics(w, engine));
}
BENCHMARK(BM_RelevantTopics)->Args({12, 0})->Args({12, 1})->Args({18, 0})->Args({18, 1});

void BM_SingleCrossing(benchmark::State& state) {
  test::Rng rng(5);
  const auto list = test::planted_single_crossing(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sc::recognize_single_crossing(list));
}
BENCHMARK(BM_SingleCrossing)->Args({10, 20})->Args({30, 100});

}  // namespace
BENCHMARK_MAIN();
