#include "mapf/conflicts.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace mapf {

namespace {

inline std::int64_t cell_time_key(int cell, int t, int map_size)
{
  return static_cast<std::int64_t>(t) * map_size + cell;
}

}  // namespace

std::vector<Conflict> validate_plan(const Instance& instance, const Plan& plan)
{
  const int m = plan.num_agents();
  for (int i = 0; i < m; ++i)
    check_path(instance.map(), instance.agent(i), plan.path(i));

  int horizon = 0;
  for (int i = 0; i < m; ++i) horizon = std::max(horizon, plan.path(i).steps());

  std::vector<Conflict> conflicts;
  const int map_size = instance.map().size();

  // Vertex conflicts, including rest-at-goal occupancy up to the horizon.
  // Beyond the horizon all agents rest, so any shared-goal collision is
  // already visible at the horizon itself.
  std::unordered_map<std::int64_t, std::vector<int>> occupants;
  for (int t = 0; t <= horizon; ++t) {
    for (int i = 0; i < m; ++i)
      occupants[cell_time_key(plan.path(i).at(t), t, map_size)].push_back(i);
    for (int i = 0; i < m; ++i) {
      const int cell = plan.path(i).at(t);
      for (const int j : occupants[cell_time_key(cell, t, map_size)]) {
        if (j > i)
          conflicts.push_back({ConflictKind::vertex, i, j, cell, cell, t});
      }
    }
    occupants.clear();
  }

  // Edge conflicts: opposite traversals of one edge across the same step.
  std::unordered_map<std::int64_t, std::vector<int>> movers;  // keyed by destination cell
  for (int t = 1; t <= horizon; ++t) {
    movers.clear();
    for (int i = 0; i < m; ++i) {
      if (plan.path(i).at(t) != plan.path(i).at(t - 1))
        movers[plan.path(i).at(t)].push_back(i);
    }
    for (int i = 0; i < m; ++i) {
      const int from = plan.path(i).at(t - 1);
      const int to = plan.path(i).at(t);
      if (from == to) continue;
      auto it = movers.find(from);
      if (it == movers.end()) continue;
      for (const int j : it->second) {
        if (j > i && plan.path(j).at(t - 1) == to)
          conflicts.push_back({ConflictKind::edge, i, j, from, to, t});
      }
    }
  }
  return conflicts;
}

}  // namespace mapf
