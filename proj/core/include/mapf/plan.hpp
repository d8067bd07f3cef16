#pragma once

#include <vector>

#include "mapf/grid_map.hpp"
#include "mapf/instance.hpp"

namespace mapf {

/// One agent's trajectory: cells[t] is the occupied cell at time step t.
/// Consecutive cells are identical (wait) or adjacent (move); cells.front()
/// is the agent's start and cells.back() its goal. After the last step the
/// agent rests at the goal.
struct Path {
  int agent = -1;
  std::vector<int> cells;

  int steps() const { return static_cast<int>(cells.size()) - 1; }

  /// Occupied cell at time t under rest-at-goal semantics.
  int at(int t) const
  {
    return t >= steps() ? cells.back() : cells[t];
  }
};

/// Delay of a path: steps taken minus the shortest possible distance.
/// `dist_to_goal` must be the distance table of this path's goal.
int compute_delay(const Path& path, const std::vector<int>& dist_to_goal);

/// Throws std::invalid_argument unless `path` is structurally valid for
/// `agent` on `map`: endpoints match, every cell passable and in bounds,
/// every step a wait or a grid edge.
void check_path(const GridMap& map, const Agent& agent, const Path& path);

/// A complete assignment of one path per agent, with cached per-path
/// delays and total cost (sum of delays).
class Plan {
 public:
  Plan() = default;

  /// Builds the plan and its delay cache. Paths must be indexed by agent
  /// id and structurally valid.
  static Plan from_paths(const Instance& instance, DistTableCache& dists,
                         std::vector<Path> paths);

  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(int agent) const { return paths_[agent]; }
  int delay(int agent) const { return delays_[agent]; }
  long long total_delay() const { return total_delay_; }
  int num_agents() const { return static_cast<int>(paths_.size()); }

  /// Swaps in a replacement path and updates the caches.
  void replace_path(int agent, Path path, int new_delay);

  /// Recomputes the total delay from scratch (consistency checks).
  long long recompute_total_delay(DistTableCache& dists) const;

 private:
  std::vector<Path> paths_;
  std::vector<int> delays_;
  long long total_delay_ = 0;
};

}  // namespace mapf
