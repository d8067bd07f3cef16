#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mapf/conflicts.hpp"
#include "mapf/prioritized.hpp"
#include "mapf/reservation.hpp"
#include "mapf/space_time_astar.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mapf;
using testsupport::grid_from_ascii;
using testsupport::instance_from_ascii;

namespace {

// Behavioral snapshot of a table over a probe grid, for restore checks.
std::vector<int> probe_table(const ReservationTable& table, const GridMap& map, int t_max)
{
  std::vector<int> bits;
  for (int t = 0; t <= t_max; ++t) {
    for (int cell = 0; cell < map.size(); ++cell) {
      bits.push_back(table.vertex_blocked(cell, t));
      bits.push_back(table.can_rest(cell, t));
    }
  }
  return bits;
}

}  // namespace

TEST_CASE("build_reservations: empty set and single-path counting")
{
  const GridMap map = grid_from_ascii(R"(
    ....
  )");
  const ReservationTable empty = build_reservations(map, std::span<const Path>{});
  CHECK(empty.empty());

  // Path of length 3: four timed vertex reservations plus rest from t=3.
  std::vector<Path> paths{{0, {map.cell_at(0, 0), map.cell_at(1, 0), map.cell_at(2, 0),
                               map.cell_at(3, 0)}}};
  const ReservationTable table = build_reservations(map, paths);
  CHECK(table.timed_count() == 4);
  CHECK(table.rest_count() == 1);
  CHECK(table.vertex_blocked(map.cell_at(3, 0), 3));
  CHECK(table.vertex_blocked(map.cell_at(3, 0), 50));  // resting forever
  CHECK(!table.vertex_blocked(map.cell_at(0, 0), 1));
  CHECK(table.edge_blocked(map.cell_at(2, 0), map.cell_at(1, 0), 1));  // reverse of the move
  CHECK(!table.edge_blocked(map.cell_at(1, 0), map.cell_at(2, 0), 1));
}

TEST_CASE("insert then remove restores table behavior")
{
  Rng rng(5);
  const GridMap map = generate_map(MapStyle::random, 8, 8, 0.15, rng);
  for (int round = 0; round < 30; ++round) {
    ReservationTable table(map.size());
    std::vector<Path> base;
    for (int i = 0; i < 3; ++i)
      base.push_back(testsupport::random_valid_path(map, i, 10, rng));
    for (const Path& p : base) table.insert_path(p);
    const auto before = probe_table(table, map, 14);

    const Path extra = testsupport::random_valid_path(map, 9, 12, rng);
    table.insert_path(extra);
    table.remove_path(extra);
    CHECK(probe_table(table, map, 14) == before);
  }
}

TEST_CASE("plan feasibility equals per-path avoidance of the others' table")
{
  // A plan is conflict-free per validate_plan iff each path triggers no
  // vertex/edge/rest block against the table built from the other paths.
  Rng rng(17);
  int checked = 0;
  while (checked < 40) {
    const Instance instance = testsupport::random_instance(8, 8, 0.15, 3, rng);
    DistTableCache dists(instance.map());
    auto plan = initial_solution(instance, dists, rng);
    if (!plan) continue;
    ++checked;

    // Perturb one path with a random wait sometimes, to cover both sides.
    std::vector<Path> paths = plan->paths();
    if (checked % 2 == 0) {
      Path& p = paths[uniform_index(rng, paths.size())];
      const int at = 1 + static_cast<int>(uniform_index(rng, p.cells.size()));
      p.cells.insert(p.cells.begin() + at, p.cells[at - 1]);
    }
    const Plan candidate = Plan::from_paths(instance, dists, paths);
    const bool feasible = validate_plan(instance, candidate).empty();

    bool all_avoid = true;
    for (int i = 0; i < candidate.num_agents() && all_avoid; ++i) {
      std::vector<Path> others;
      for (int j = 0; j < candidate.num_agents(); ++j)
        if (j != i) others.push_back(candidate.path(j));
      const ReservationTable table = build_reservations(instance.map(), others);
      const Path& p = candidate.path(i);
      for (int t = 0; t <= p.steps() && all_avoid; ++t) {
        if (table.vertex_blocked(p.cells[t], t)) all_avoid = false;
        if (t > 0 && p.cells[t] != p.cells[t - 1] &&
            table.edge_blocked(p.cells[t - 1], p.cells[t], t - 1))
          all_avoid = false;
      }
      if (!table.can_rest(p.cells.back(), p.steps())) all_avoid = false;
    }
    CHECK(feasible == all_avoid);
  }
}

TEST_CASE("plan_path: empty table reduces to plain shortest path")
{
  const GridMap map = grid_from_ascii(R"(
    .....
    .@@@.
    .....
  )");
  const auto dist = map.shortest_distance_table(map.cell_at(4, 2));
  const ReservationTable table(map.size());
  const PathQuery query{0, map.cell_at(0, 0), map.cell_at(4, 2),
                        plan_horizon(map, dist[map.cell_at(0, 0)], 0)};
  const auto path = plan_path(map, dist, table, query);
  REQUIRE(path.has_value());
  CHECK(path->steps() == dist[map.cell_at(0, 0)]);
  CHECK(path->cells.front() == map.cell_at(0, 0));
  CHECK(path->cells.back() == map.cell_at(4, 2));
}

TEST_CASE("plan_path: corridor blocked by a forever-resting agent fails")
{
  const GridMap map = grid_from_ascii(R"(
    .....
  )");
  std::vector<Path> others{{1, {map.cell_at(2, 0), map.cell_at(2, 0)}}};  // parks at (2,0)
  const ReservationTable table = build_reservations(map, others);
  const auto dist = map.shortest_distance_table(map.cell_at(4, 0));
  const PathQuery query{0, map.cell_at(0, 0), map.cell_at(4, 0), 200};
  CHECK(!plan_path(map, dist, table, query).has_value());
}

TEST_CASE("plan_path: goal-rest feasibility forces waiting out a crossing agent")
{
  //  Agent 1 passes through agent 0's goal late; 0 must not park there first.
  const GridMap map = grid_from_ascii(R"(
    .....
    .....
  )");
  // Agent 1 crosses (1,0) at t=3 on its way to (0,0).
  std::vector<Path> others{{1, {map.cell_at(4, 0), map.cell_at(3, 0), map.cell_at(2, 0),
                                map.cell_at(1, 0), map.cell_at(0, 0)}}};
  const ReservationTable table = build_reservations(map, others);
  const auto dist = map.shortest_distance_table(map.cell_at(1, 0));
  const PathQuery query{0, map.cell_at(1, 1), map.cell_at(1, 0), 100};
  const auto path = plan_path(map, dist, table, query);
  REQUIRE(path.has_value());
  CHECK(path->steps() >= 4);  // shortest is 1, but resting at t<4 collides
  // The oracle agrees.
  const auto oracle = testsupport::space_time_bfs(map, query.start, query.goal, others, 100);
  REQUIRE(oracle.has_value());
  CHECK(path->steps() == *oracle);
}

TEST_CASE("plan_path equals the space-time BFS oracle on random instances")
{
  Rng rng(23);
  int rounds = 0;
  while (rounds < 150) {
    // Up to 3 reserved agent paths from a solvable instance.
    Instance instance = testsupport::random_instance(8, 8, 0.2, 4, rng);
    DistTableCache dists(instance.map());
    auto plan = initial_solution(instance, dists, rng);
    if (!plan) continue;
    ++rounds;
    std::vector<Path> others{plan->path(1), plan->path(2), plan->path(3)};
    const Agent& agent = instance.agent(0);
    const auto& dist = dists.get(agent.goal);
    const int horizon = plan_horizon(instance.map(), dist[agent.start], 0);
    const ReservationTable table = build_reservations(instance.map(), others);
    const auto path = plan_path(instance.map(), dist, table, PathQuery{0, agent.start,
                                                                       agent.goal, horizon});
    const auto oracle =
        testsupport::space_time_bfs(instance.map(), agent.start, agent.goal, others, horizon);
    REQUIRE(path.has_value() == oracle.has_value());
    if (path) {
      CHECK(path->steps() == *oracle);
      // Returned path avoids the whole table, including rest feasibility.
      for (int t = 0; t <= path->steps(); ++t)
        CHECK(!table.vertex_blocked(path->cells[t], t));
      CHECK(table.can_rest(path->cells.back(), path->steps()));
    }
  }
}

TEST_CASE("plan_path is deterministic")
{
  Rng rng(31);
  const Instance instance = testsupport::random_instance(10, 10, 0.2, 4, rng);
  DistTableCache dists(instance.map());
  auto plan = initial_solution(instance, dists, rng);
  REQUIRE(plan.has_value());
  std::vector<Path> others{plan->path(1), plan->path(2), plan->path(3)};
  const ReservationTable table = build_reservations(instance.map(), others);
  const Agent& agent = instance.agent(0);
  const auto& dist = dists.get(agent.goal);
  const PathQuery query{0, agent.start, agent.goal,
                        plan_horizon(instance.map(), dist[agent.start], 0)};
  const auto first = plan_path(instance.map(), dist, table, query);
  const auto second = plan_path(instance.map(), dist, table, query);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->cells == second->cells);
}
