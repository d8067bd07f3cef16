#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mapf/plan.hpp"
#include "mapf/reservation.hpp"

namespace mapf {

struct PathQuery {
  int agent;
  int start;
  int goal;
  int horizon;  ///< latest admissible arrival step
};

/// Reusable search buffers. One scratch serves any number of sequential
/// searches; reuse avoids reallocating the visited table and open list on
/// every replan.
struct SearchScratch {
  struct Node {
    int cell;
    int t;
    std::int32_t parent;
  };
  struct OpenEntry {
    int f;
    int g;
    std::uint32_t seq;
    std::uint32_t node;
  };
  std::vector<Node> nodes;
  std::vector<OpenEntry> heap;
  std::vector<std::uint32_t> visited_epoch;  // indexed by t * map_size + cell
  std::uint32_t epoch = 0;
};

/// Minimum-length path from start to goal avoiding every reservation,
/// found by space-time A* with the true-distance table as heuristic.
/// The path may end at the goal only if the agent can rest there forever
/// afterwards. Returns std::nullopt when the goal is unreachable, the
/// start is blocked at step 0, or no path exists within the horizon.
///
/// Tie-breaking is fixed (deeper states first, then generation order with
/// moves tried up, right, down, left, wait), so identical inputs produce
/// identical paths.
std::optional<Path> plan_path(const GridMap& map, const std::vector<int>& dist_to_goal,
                              const ReservationTable& table, const PathQuery& query,
                              SearchScratch& scratch);

std::optional<Path> plan_path(const GridMap& map, const std::vector<int>& dist_to_goal,
                              const ReservationTable& table, const PathQuery& query);

}  // namespace mapf
