#include "mapf/instance.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace mapf {

Instance::Instance(GridMap map, std::vector<Agent> agents)
    : map_(std::move(map)), agents_(std::move(agents))
{
  // Reachability is checked with one BFS per distinct goal.
  std::unordered_map<int, std::vector<int>> goal_tables;
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    const Agent& a = agents_[i];
    if (a.id != static_cast<int>(i))
      throw std::invalid_argument("Instance: agent ids must be 0..m-1 in order");
    if (a.start < 0 || a.start >= map_.size() || !map_.passable(a.start))
      throw std::invalid_argument("Instance: agent " + std::to_string(a.id) +
                                  " has an out-of-bounds or blocked start");
    if (a.goal < 0 || a.goal >= map_.size() || !map_.passable(a.goal))
      throw std::invalid_argument("Instance: agent " + std::to_string(a.id) +
                                  " has an out-of-bounds or blocked goal");
    auto it = goal_tables.find(a.goal);
    if (it == goal_tables.end())
      it = goal_tables.emplace(a.goal, map_.shortest_distance_table(a.goal)).first;
    if (it->second[a.start] == GridMap::kUnreachable)
      throw std::invalid_argument("Instance: goal of agent " + std::to_string(a.id) +
                                  " is unreachable from its start");
  }
}

}  // namespace mapf
