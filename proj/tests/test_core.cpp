#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>

#include "mapf/conflicts.hpp"
#include "mapf/plan.hpp"
#include "mapf/trace.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mapf;
using testsupport::grid_from_ascii;
using testsupport::instance_from_ascii;

TEST_CASE("distance table: goal cell and open-grid corners")
{
  const GridMap map = grid_from_ascii(R"(
    ...
    ...
    ...
  )");
  const auto table = map.shortest_distance_table(map.cell_at(0, 0));
  CHECK(table[map.cell_at(0, 0)] == 0);
  CHECK(table[map.cell_at(2, 2)] == 4);  // Manhattan distance, no obstacles
  CHECK(table[map.cell_at(2, 0)] == 2);
}

TEST_CASE("distance table: rejects blocked or out-of-bounds goals")
{
  const GridMap map = grid_from_ascii(R"(
    .@
    ..
  )");
  CHECK_THROWS_AS(map.shortest_distance_table(map.cell_at(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(map.shortest_distance_table(99), std::invalid_argument);
}

TEST_CASE("distance table matches the relaxation oracle on random maps")
{
  Rng rng(42);
  for (int round = 0; round < 20; ++round) {
    const GridMap map = generate_map(MapStyle::random, 8, 8, 0.2, rng);
    int goal = -1;
    do {
      goal = static_cast<int>(uniform_index(rng, map.size()));
    } while (!map.passable(goal));
    const auto expected = testsupport::relaxation_distances(map, goal);
    const auto actual = map.shortest_distance_table(goal);
    REQUIRE(actual == expected);
  }
}

TEST_CASE("distance table marks unreachable cells")
{
  const GridMap map = grid_from_ascii(R"(
    ..@.
    ..@.
    @@@.
  )");
  const auto table = map.shortest_distance_table(map.cell_at(0, 0));
  CHECK(table[map.cell_at(3, 0)] == GridMap::kUnreachable);
  CHECK(table[map.cell_at(1, 1)] == 2);
}

TEST_CASE("compute_delay: shortest paths have zero delay, waits count")
{
  const GridMap map = grid_from_ascii(R"(
    .....
    .....
  )");
  const auto dist = map.shortest_distance_table(map.cell_at(4, 0));
  Path shortest{0, {map.cell_at(0, 0), map.cell_at(1, 0), map.cell_at(2, 0),
                    map.cell_at(3, 0), map.cell_at(4, 0)}};
  CHECK(compute_delay(shortest, dist) == 0);

  Path waiting{0, {map.cell_at(0, 0), map.cell_at(0, 0), map.cell_at(1, 0),
                   map.cell_at(1, 0), map.cell_at(2, 0), map.cell_at(3, 0),
                   map.cell_at(4, 0)}};
  CHECK(compute_delay(waiting, dist) == 2);
}

TEST_CASE("compute_delay equals oracle length minus oracle distance on random detours")
{
  Rng rng(7);
  const GridMap map = generate_map(MapStyle::random, 8, 8, 0.15, rng);
  for (int round = 0; round < 200; ++round) {
    Path path = testsupport::random_valid_path(map, 0, 12, rng);
    const int goal = path.cells.back();
    const auto dist = testsupport::relaxation_distances(map, goal);
    if (dist[path.cells.front()] == GridMap::kUnreachable) continue;
    const int delay = compute_delay(path, map.shortest_distance_table(goal));
    CHECK(delay == path.steps() - dist[path.cells.front()]);
    CHECK(delay >= 0);
  }
}

TEST_CASE("validate_plan: vertex conflict at a shared cell")
{
  const Instance instance = instance_from_ascii(R"(
    .....
    .....
  )", {{{0, 0}, {2, 0}}, {{2, 1}, {2, 0}}});
  // Both agents reach (2,0) at step 2.
  DistTableCache dists(instance.map());
  std::vector<Path> paths(2);
  const auto& map = instance.map();
  paths[0] = {0, {map.cell_at(0, 0), map.cell_at(1, 0), map.cell_at(2, 0)}};
  paths[1] = {1, {map.cell_at(2, 1), map.cell_at(2, 1), map.cell_at(2, 0)}};
  const Plan plan = Plan::from_paths(instance, dists, paths);
  const auto conflicts = validate_plan(instance, plan);
  REQUIRE(conflicts.size() >= 1);
  bool found = false;
  for (const auto& c : conflicts)
    if (c.kind == ConflictKind::vertex && c.time == 2 && c.cell_a == map.cell_at(2, 0))
      found = true;
  CHECK(found);
}

TEST_CASE("validate_plan: swap produces one edge conflict")
{
  const Instance instance = instance_from_ascii(R"(
    ....
  )", {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
  DistTableCache dists(instance.map());
  const auto& map = instance.map();
  std::vector<Path> paths(2);
  paths[0] = {0, {map.cell_at(0, 0), map.cell_at(1, 0)}};
  paths[1] = {1, {map.cell_at(1, 0), map.cell_at(0, 0)}};
  const Plan plan = Plan::from_paths(instance, dists, paths);
  const auto conflicts = validate_plan(instance, plan);
  REQUIRE(conflicts.size() == 1);
  CHECK(conflicts[0].kind == ConflictKind::edge);
  CHECK(conflicts[0].time == 1);
}

TEST_CASE("validate_plan: disjoint regions are conflict-free")
{
  const Instance instance = instance_from_ascii(R"(
    ...@...
    ...@...
  )", {{{0, 0}, {0, 1}}, {{4, 0}, {6, 1}}});
  DistTableCache dists(instance.map());
  const auto& map = instance.map();
  std::vector<Path> paths(2);
  paths[0] = {0, {map.cell_at(0, 0), map.cell_at(0, 1)}};
  paths[1] = {1, {map.cell_at(4, 0), map.cell_at(5, 0), map.cell_at(6, 0), map.cell_at(6, 1)}};
  const Plan plan = Plan::from_paths(instance, dists, paths);
  CHECK(validate_plan(instance, plan).empty());
}

TEST_CASE("validate_plan: resting agents still collide at their goals")
{
  const Instance instance = instance_from_ascii(R"(
    .....
  )", {{{1, 0}, {0, 0}}, {{4, 0}, {1, 0}}});
  DistTableCache dists(instance.map());
  const auto& map = instance.map();
  std::vector<Path> paths(2);
  // Agent 0 arrives home at t=1 and rests; agent 1 crosses cell (1,0) at t=3.
  paths[0] = {0, {map.cell_at(1, 0), map.cell_at(0, 0)}};
  paths[1] = {1, {map.cell_at(4, 0), map.cell_at(3, 0), map.cell_at(2, 0), map.cell_at(1, 0)}};
  const Plan plan = Plan::from_paths(instance, dists, paths);
  const auto conflicts = validate_plan(instance, plan);
  CHECK(conflicts.empty());  // 0 rests at (0,0), so no collision

  // Now send agent 1 through agent 0's resting cell.
  paths[1] = {1, {map.cell_at(4, 0), map.cell_at(3, 0), map.cell_at(2, 0), map.cell_at(1, 0),
                  map.cell_at(0, 0)}};
  const Instance instance2 = instance_from_ascii(R"(
    .....
  )", {{{1, 0}, {0, 0}}, {{4, 0}, {0, 0}}});
  DistTableCache dists2(instance2.map());
  const Plan plan2 = Plan::from_paths(instance2, dists2, paths);
  const auto conflicts2 = validate_plan(instance2, plan2);
  REQUIRE(!conflicts2.empty());
  CHECK(conflicts2[0].kind == ConflictKind::vertex);
  CHECK(conflicts2[0].time == 4);
}

TEST_CASE("validate_plan: structurally invalid paths throw instead of reporting")
{
  const Instance instance = instance_from_ascii(R"(
    ...
  )", {{{0, 0}, {2, 0}}});
  DistTableCache dists(instance.map());
  const auto& map = instance.map();
  std::vector<Path> paths(1);
  paths[0] = {0, {map.cell_at(0, 0), map.cell_at(2, 0)}};  // teleport
  CHECK_THROWS_AS(Plan::from_paths(instance, dists, paths), std::invalid_argument);
}

TEST_CASE("plan cost is the sum of per-agent delays")
{
  Rng rng(11);
  const Instance instance = testsupport::random_instance(8, 8, 0.15, 4, rng);
  DistTableCache dists(instance.map());
  // Straight shortest paths would be the natural check, but random valid
  // plans come from the planner; here we only need the additivity contract.
  std::vector<Path> paths;
  for (const Agent& a : instance.agents()) {
    // BFS parent walk: any shortest path.
    const auto dist = dists.get(a.goal);
    Path p{a.id, {a.start}};
    int cell = a.start;
    std::array<int, 4> adjacent;
    while (cell != a.goal) {
      const int count = instance.map().neighbors(cell, adjacent);
      for (int i = 0; i < count; ++i) {
        if (dist[adjacent[i]] == dist[cell] - 1) {
          cell = adjacent[i];
          break;
        }
      }
      p.cells.push_back(cell);
    }
    paths.push_back(std::move(p));
  }
  const Plan plan = Plan::from_paths(instance, dists, paths);
  long long sum = 0;
  for (int i = 0; i < plan.num_agents(); ++i) sum += plan.delay(i);
  CHECK(plan.total_delay() == sum);
  CHECK(plan.total_delay() == 0);  // all shortest
  CHECK(plan.recompute_total_delay(dists) == 0);
}

TEST_CASE("auc: single entry and two-entry step integrals")
{
  RunTrace trace;
  trace.add(0.0, 10);
  CHECK(auc(trace, 10.0) == doctest::Approx(100.0));

  RunTrace two;
  two.add(0.0, 10);
  two.add(5.0, 4);
  CHECK(auc(two, 10.0) == doctest::Approx(70.0));
}

TEST_CASE("auc matches a dense-sampling oracle on random traces")
{
  Rng rng(99);
  for (int round = 0; round < 50; ++round) {
    RunTrace trace;
    double t = uniform_unit(rng);
    long long cost = 500 + static_cast<long long>(uniform_index(rng, 500));
    const int entries = 1 + static_cast<int>(uniform_index(rng, 10));
    for (int i = 0; i < entries; ++i) {
      trace.add(t, cost);
      t += 0.25 + uniform_unit(rng);
      cost -= static_cast<long long>(uniform_index(rng, 50));
    }
    const double budget = t + uniform_unit(rng);

    // Summation oracle: chop [t0, budget] at every entry time, subdivide
    // each piece, and evaluate best-cost-so-far at slice midpoints as the
    // minimum cost over all entries at or before the point.
    std::vector<double> cuts;
    for (const auto& e : trace.entries) cuts.push_back(e.time_s);
    cuts.push_back(budget);
    const auto best_cost_at = [&](double when) {
      long long best = std::numeric_limits<long long>::max();
      for (const auto& e : trace.entries)
        if (e.time_s <= when) best = std::min(best, e.cost);
      return static_cast<double>(best);
    };
    double expected = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const int slices = 64;
      const double width = (cuts[i + 1] - cuts[i]) / slices;
      for (int s = 0; s < slices; ++s)
        expected += best_cost_at(cuts[i] + (s + 0.5) * width) * width;
    }
    CHECK(auc(trace, budget) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("auc input errors")
{
  RunTrace trace;
  CHECK_THROWS_AS(auc(trace, 1.0), std::invalid_argument);
  trace.add(2.0, 5);
  CHECK_THROWS_AS(auc(trace, 1.0), std::invalid_argument);
}

TEST_CASE("auc monotonicity: appending an improvement never increases it")
{
  Rng rng(123);
  for (int round = 0; round < 100; ++round) {
    RunTrace trace;
    double t = 0.1;
    long long cost = 100 + static_cast<long long>(uniform_index(rng, 100));
    const int entries = 1 + static_cast<int>(uniform_index(rng, 6));
    for (int i = 0; i < entries; ++i) {
      trace.add(t, cost);
      t += 0.1 + uniform_unit(rng);
      cost -= 1 + static_cast<long long>(uniform_index(rng, 20));
      if (cost < 0) cost = 0;
    }
    const double budget = t + 1.0;
    const double before = auc(trace, budget);
    RunTrace improved = trace;
    improved.add(t, std::max<long long>(0, trace.entries.back().cost - 1));
    CHECK(auc(improved, budget) <= before + 1e-9);
  }
}

TEST_CASE("trace invariants are enforced")
{
  RunTrace trace;
  trace.add(1.0, 10);
  CHECK_THROWS_AS(trace.add(1.0, 9), std::invalid_argument);   // non-increasing time
  CHECK_THROWS_AS(trace.add(2.0, 11), std::invalid_argument);  // increasing cost
  trace.add(2.0, 10);
  CHECK(trace.entries.size() == 2);
}
