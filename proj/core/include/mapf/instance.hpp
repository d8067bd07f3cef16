#pragma once

#include <vector>

#include "mapf/grid_map.hpp"

namespace mapf {

struct Agent {
  int id = -1;
  int start = -1;
  int goal = -1;
};

/// A map plus an ordered agent list; the unit a solver consumes.
/// Construction validates that agent ids equal their positions, that all
/// endpoints are passable, and that every goal is reachable from its start.
class Instance {
 public:
  Instance(GridMap map, std::vector<Agent> agents);

  const GridMap& map() const { return map_; }
  const std::vector<Agent>& agents() const { return agents_; }
  const Agent& agent(int id) const { return agents_[id]; }
  int num_agents() const { return static_cast<int>(agents_.size()); }

 private:
  GridMap map_;
  std::vector<Agent> agents_;
};

}  // namespace mapf
