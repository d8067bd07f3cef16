#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "mapf/space_time_astar.hpp"

using namespace mapf;

static void BM_DistanceTable(benchmark::State& state)
{
  auto& f = benchsupport::fixture();
  std::size_t goal_index = 0;
  for (auto _ : state) {
    const int goal = f.instance.agent(goal_index % 150).goal;
    goal_index += 17;
    benchmark::DoNotOptimize(f.instance.map().shortest_distance_table(goal));
  }
}
BENCHMARK(BM_DistanceTable);

static void BM_SpaceTimeAStar(benchmark::State& state)
{
  auto& f = benchsupport::fixture();
  // Replan each agent against everyone else's reservations.
  ReservationTable table = build_reservations(f.instance.map(), f.plan.paths());
  SearchScratch scratch;
  int agent = 0;
  long long expanded_paths = 0;
  for (auto _ : state) {
    agent = (agent + 1) % f.instance.num_agents();
    const Path& old = f.plan.path(agent);
    table.remove_path(old);
    const Agent& a = f.instance.agent(agent);
    const auto& dist = f.dists.get(a.goal);
    const PathQuery query{agent, a.start, a.goal,
                          plan_horizon(f.instance.map(), dist[a.start], old.steps())};
    auto path = plan_path(f.instance.map(), dist, table, query, scratch);
    benchmark::DoNotOptimize(path);
    expanded_paths += path.has_value();
    table.insert_path(old);
  }
  state.counters["found"] = static_cast<double>(expanded_paths);
}
BENCHMARK(BM_SpaceTimeAStar);

static void BM_ReservationRebuild(benchmark::State& state)
{
  auto& f = benchsupport::fixture();
  for (auto _ : state) {
    ReservationTable table = build_reservations(f.instance.map(), f.plan.paths());
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_ReservationRebuild);
