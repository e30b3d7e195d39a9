#include <benchmark/benchmark.h>

#include "netform/dynamics.hpp"
#include "netform/engine.hpp"

using namespace netform;

namespace {

WeightMatrix random_weights(int n, std::uint64_t seed) {
  RandomSource rng(seed);
  WeightMatrix wm{SquareMatrix(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) wm.w(i, j) = 0.5 + rng.next_double();
    }
  }
  return wm;
}

void BM_LinearProbabilities(benchmark::State& state) {
  const auto wm = random_weights(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear_probabilities(wm));
  }
}

void BM_ResistanceProbabilities(benchmark::State& state) {
  const auto wm = random_weights(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(resistance_probabilities(wm));
  }
}

void BM_LoglikProbabilities(benchmark::State& state) {
  const auto wm = random_weights(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loglik_probabilities(wm));
  }
}

void BM_RunRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto wm = random_weights(n, 4);
  const StrategyProfile profile(n, Strategy::Trivial);
  DynamicsConfig cfg;
  RandomSource rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_round(wm, profile, Game::FriendsII, cfg, rng));
  }
}

void BM_Episode1000(benchmark::State& state) {
  EpisodeSpec spec;
  spec.n = static_cast<int>(state.range(0));
  spec.game = Game::FriendsII;
  spec.rounds = 1000;
  spec.snapshot_stride = 1000;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_episode(spec, ++seed));
  }
}

}  // namespace

BENCHMARK(BM_LinearProbabilities)->Arg(3)->Arg(10)->Arg(30)->Arg(100);
BENCHMARK(BM_ResistanceProbabilities)->Arg(3)->Arg(10)->Arg(30)->Arg(100);
BENCHMARK(BM_LoglikProbabilities)->Arg(3)->Arg(10)->Arg(30)->Arg(100);
BENCHMARK(BM_RunRound)->Arg(3)->Arg(10)->Arg(30);
BENCHMARK(BM_Episode1000)->Arg(3)->Arg(10);

BENCHMARK_MAIN();
