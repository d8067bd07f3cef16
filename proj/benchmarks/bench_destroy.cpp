#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "mapf/destroy.hpp"

using namespace mapf;

static void BM_RandomWalkNeighborhood(benchmark::State& state)
{
  auto& f = benchsupport::fixture();
  const ReservationTable table = build_reservations(f.instance.map(), f.plan.paths());
  Rng rng(3);
  const auto seeds = top_k_delayed(f.plan, 32);
  std::size_t i = 0;
  for (auto _ : state) {
    const int seed = seeds[i++ % seeds.size()];
    benchmark::DoNotOptimize(
        random_walk_neighborhood(f.instance, f.dists, f.plan, table, seed, 8, rng));
  }
}
BENCHMARK(BM_RandomWalkNeighborhood);

static void BM_AddressDestroy(benchmark::State& state)
{
  auto& f = benchsupport::fixture();
  const ReservationTable table = build_reservations(f.instance.map(), f.plan.paths());
  Rng rng(4);
  const BetaParams params(f.instance.num_agents());
  for (auto _ : state) {
    benchmark::DoNotOptimize(address_destroy(f.instance, f.dists, f.plan, table, 32, params,
                                             BanditKind::thompson, 0.5, 8, rng));
  }
}
BENCHMARK(BM_AddressDestroy);

static void BM_MapBasedDestroy(benchmark::State& state)
{
  auto& f = benchsupport::fixture();
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(map_based_destroy(f.instance, f.plan, 8, rng));
  }
}
BENCHMARK(BM_MapBasedDestroy);

static void BM_TopKSort(benchmark::State& state)
{
  auto& f = benchsupport::fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(top_k_delayed(f.plan, 32));
  }
}
BENCHMARK(BM_TopKSort);
