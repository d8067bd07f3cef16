#include "mapf/prioritized.hpp"

#include <algorithm>
#include <numeric>

#include "mapf/space_time_astar.hpp"

namespace mapf {

int plan_horizon(const GridMap& map, int shortest_distance, int previous_steps)
{
  return shortest_distance + std::max(map.width() + map.height(), 2 * previous_steps);
}

std::optional<Plan> initial_solution(const Instance& instance, DistTableCache& dists,
                                     Rng& rng, const PlannerConfig& config)
{
  const int m = instance.num_agents();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);

  SearchScratch scratch;
  for (int attempt = 0; attempt < config.max_restarts; ++attempt) {
    shuffle(order, rng);
    ReservationTable table(instance.map().size());
    std::vector<Path> paths(m);
    bool ok = true;
    for (const int id : order) {
      const Agent& agent = instance.agent(id);
      const auto& dist = dists.get(agent.goal);
      const PathQuery query{id, agent.start, agent.goal,
                            plan_horizon(instance.map(), dist[agent.start], 0)};
      auto path = plan_path(instance.map(), dist, table, query, scratch);
      if (!path) {
        ok = false;
        break;
      }
      table.insert_path(*path);
      paths[id] = std::move(*path);
    }
    if (ok) return Plan::from_paths(instance, dists, std::move(paths));
  }
  return std::nullopt;
}

std::optional<std::vector<Path>> repair_on_table(const Instance& instance,
                                                 DistTableCache& dists,
                                                 std::span<const int> neighborhood,
                                                 std::span<const int> previous_steps,
                                                 ReservationTable& table, Rng& rng,
                                                 SearchScratch* scratch)
{
  SearchScratch local;
  if (!scratch) scratch = &local;
  std::vector<int> order(neighborhood.begin(), neighborhood.end());
  std::vector<int> steps_by_position(previous_steps.begin(), previous_steps.end());
  {
    // One shuffle applied to both spans keeps (agent, previous length) pairs aligned.
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::size_t j = uniform_index(rng, i);
      std::swap(order[i - 1], order[j]);
      std::swap(steps_by_position[i - 1], steps_by_position[j]);
    }
  }

  std::vector<Path> planned;
  planned.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Agent& agent = instance.agent(order[i]);
    const auto& dist = dists.get(agent.goal);
    const PathQuery query{agent.id, agent.start, agent.goal,
                          plan_horizon(instance.map(), dist[agent.start], steps_by_position[i])};
    auto path = plan_path(instance.map(), dist, table, query, *scratch);
    if (!path) {
      for (const Path& p : planned) table.remove_path(p);
      return std::nullopt;
    }
    table.insert_path(*path);
    planned.push_back(std::move(*path));
  }

  // Return in agent-id order matching the neighborhood argument.
  std::vector<Path> result(neighborhood.size());
  for (Path& p : planned) {
    const auto pos = std::find(neighborhood.begin(), neighborhood.end(), p.agent);
    result[pos - neighborhood.begin()] = std::move(p);
  }
  return result;
}

std::optional<std::vector<Path>> repair(const Instance& instance, DistTableCache& dists,
                                        std::span<const int> neighborhood,
                                        std::span<const Path> other_paths, Rng& rng)
{
  ReservationTable table = build_reservations(instance.map(), other_paths);
  std::vector<int> previous_steps(neighborhood.size(), 0);
  return repair_on_table(instance, dists, neighborhood, previous_steps, table, rng);
}

}  // namespace mapf
