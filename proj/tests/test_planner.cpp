#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mapf/conflicts.hpp"
#include "mapf/prioritized.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mapf;
using testsupport::instance_from_ascii;

TEST_CASE("initial_solution: single agent takes its shortest path")
{
  const Instance instance = instance_from_ascii(R"(
    .....
    .@@@.
  )", {{{0, 0}, {4, 1}}});
  DistTableCache dists(instance.map());
  Rng rng(1);
  const auto plan = initial_solution(instance, dists, rng);
  REQUIRE(plan.has_value());
  CHECK(plan->total_delay() == 0);
  CHECK(plan->path(0).steps() == 5);
}

TEST_CASE("initial_solution: disjoint corridors both get shortest paths")
{
  const Instance instance = instance_from_ascii(R"(
    .....
    @@@@@
    .....
  )", {{{0, 0}, {4, 0}}, {{4, 2}, {0, 2}}});
  DistTableCache dists(instance.map());
  Rng rng(2);
  const auto plan = initial_solution(instance, dists, rng);
  REQUIRE(plan.has_value());
  CHECK(plan->total_delay() == 0);
  CHECK(validate_plan(instance, *plan).empty());
}

TEST_CASE("initial_solution cost is bounded below by the joint optimum")
{
  Rng rng(3);
  int solved = 0, attempts = 0;
  while (attempts < 25) {
    const Instance instance = testsupport::random_instance(8, 8, 0.15, 6, rng);
    ++attempts;
    DistTableCache dists(instance.map());
    auto plan = initial_solution(instance, dists, rng);
    if (!plan) continue;
    ++solved;
    REQUIRE(validate_plan(instance, *plan).empty());
    const long long optimal =
        testsupport::optimal_sum_of_delays(instance, plan->total_delay());
    CHECK(plan->total_delay() >= optimal);
  }
  // PP should succeed on nearly all of these sparse instances.
  CHECK(solved >= 20);
}

TEST_CASE("repair: one unobstructed agent recovers its shortest path")
{
  const Instance instance = instance_from_ascii(R"(
    .....
    .....
  )", {{{0, 0}, {4, 0}}});
  DistTableCache dists(instance.map());
  Rng rng(4);
  // Start from a detoured path.
  const auto& map = instance.map();
  std::vector<Path> others;  // nobody else
  const std::vector<int> neighborhood{0};
  const auto repaired = repair(instance, dists, neighborhood, others, rng);
  REQUIRE(repaired.has_value());
  CHECK((*repaired)[0].steps() == 4);
}

TEST_CASE("repair of all agents behaves like one planning pass")
{
  Rng rng(5);
  const Instance instance = testsupport::random_instance(8, 8, 0.1, 5, rng);
  DistTableCache dists(instance.map());
  const std::vector<int> everyone{0, 1, 2, 3, 4};
  const auto repaired = repair(instance, dists, everyone, {}, rng);
  REQUIRE(repaired.has_value());
  const Plan plan = Plan::from_paths(instance, dists, *repaired);
  CHECK(validate_plan(instance, plan).empty());
}

TEST_CASE("random destroy/repair rounds always yield feasible plans")
{
  Rng rng(6);
  int rounds = 0;
  while (rounds < 1000) {
    const Instance instance = testsupport::random_instance(8, 8, 0.15, 6, rng);
    DistTableCache dists(instance.map());
    auto plan = initial_solution(instance, dists, rng);
    if (!plan) continue;

    // Several destroy/repair rounds per instance.
    for (int r = 0; r < 10 && rounds < 1000; ++r, ++rounds) {
      std::vector<int> ids(instance.num_agents());
      for (int i = 0; i < instance.num_agents(); ++i) ids[i] = i;
      const auto members = sample_without_replacement(
          ids, 2 + uniform_index(rng, 3), rng);
      std::vector<Path> others;
      for (int i = 0; i < instance.num_agents(); ++i)
        if (std::find(members.begin(), members.end(), i) == members.end())
          others.push_back(plan->path(i));
      const auto repaired = repair(instance, dists, members, others, rng);
      if (!repaired) continue;  // failed iteration: old plan stays
      for (std::size_t i = 0; i < members.size(); ++i) {
        const Path& p = (*repaired)[i];
        plan->replace_path(members[i], p, compute_delay(p, dists.get(p.cells.back())));
      }
      REQUIRE(validate_plan(instance, *plan).empty());
      CHECK(plan->recompute_total_delay(dists) == plan->total_delay());
    }
  }
}

TEST_CASE("repair failure leaves the reservation table untouched")
{
  // Agent 0 is boxed in by resting agents, so repair must fail and the
  // table must be restored.
  const Instance instance = instance_from_ascii(R"(
    ...
    ...
  )", {{{0, 0}, {2, 0}}, {{1, 0}, {1, 0}}, {{1, 1}, {1, 1}}, {{0, 1}, {0, 1}}});
  DistTableCache dists(instance.map());
  Rng rng(7);
  std::vector<Path> others;
  const auto& map = instance.map();
  others.push_back({1, {map.cell_at(1, 0)}});
  others.push_back({2, {map.cell_at(1, 1)}});
  others.push_back({3, {map.cell_at(0, 1)}});
  ReservationTable table = build_reservations(instance.map(), others);
  const std::size_t timed_before = table.timed_count();
  const std::size_t rests_before = table.rest_count();
  const std::vector<int> neighborhood{0};
  const std::vector<int> previous{0};
  const auto result = repair_on_table(instance, dists, neighborhood, previous, table, rng);
  CHECK(!result.has_value());
  CHECK(table.timed_count() == timed_before);
  CHECK(table.rest_count() == rests_before);
}
