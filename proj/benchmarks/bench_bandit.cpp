#include <benchmark/benchmark.h>

#include "mapf/bandit.hpp"

using namespace mapf;

static void BM_SampleBeta(benchmark::State& state)
{
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_beta(13.0, 29.0, rng));
}
BENCHMARK(BM_SampleBeta);

static void BM_SelectThompsonK32(benchmark::State& state)
{
  Rng rng(2);
  BetaParams params(512);
  for (int i = 0; i < 512; ++i)
    for (int u = 0; u < i % 7; ++u) params.update(i, u % 2 == 0);
  std::vector<int> candidates(32);
  for (int i = 0; i < 32; ++i) candidates[i] = i * 3;
  for (auto _ : state) benchmark::DoNotOptimize(select_thompson(params, candidates, rng));
}
BENCHMARK(BM_SelectThompsonK32);

static void BM_RouletteSelect(benchmark::State& state)
{
  Rng rng(3);
  SelectionWeights weights(4);
  weights.update(1, 12.0);
  weights.update(2, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(weights.select(rng));
}
BENCHMARK(BM_RouletteSelect);
