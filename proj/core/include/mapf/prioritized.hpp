#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mapf/plan.hpp"
#include "mapf/reservation.hpp"
#include "mapf/rng.hpp"
#include "mapf/space_time_astar.hpp"

namespace mapf {

struct PlannerConfig {
  int max_restarts = 10;  ///< random priority-order restarts for the initial solution
};

/// Search horizon for replanning one agent: shortest distance plus
/// max(map width + height, 2 * previous path steps). `previous_steps`
/// is 0 when the agent has no path yet.
int plan_horizon(const GridMap& map, int shortest_distance, int previous_steps);

/// Prioritized planning: plans agents one by one in a random priority
/// order, each avoiding all previously planned paths. Retries with a fresh
/// order up to config.max_restarts times; returns std::nullopt if every
/// attempt leaves some agent unplannable.
std::optional<Plan> initial_solution(const Instance& instance, DistTableCache& dists,
                                     Rng& rng, const PlannerConfig& config = {});

/// Replans exactly the neighborhood agents in random priority order against
/// `table`, which must hold the reservations of every other agent (and not
/// the neighborhood's old paths). Planned paths are inserted into the table
/// as they are found. On any member's failure the table is restored to its
/// entry state and std::nullopt is returned; no partial result is kept.
/// `scratch` may be shared across calls to reuse search buffers.
std::optional<std::vector<Path>> repair_on_table(const Instance& instance,
                                                 DistTableCache& dists,
                                                 std::span<const int> neighborhood,
                                                 std::span<const int> previous_steps,
                                                 ReservationTable& table, Rng& rng,
                                                 SearchScratch* scratch = nullptr);

/// Convenience form: builds the reservation table from the other agents'
/// paths, then replans the neighborhood against it.
std::optional<std::vector<Path>> repair(const Instance& instance, DistTableCache& dists,
                                        std::span<const int> neighborhood,
                                        std::span<const Path> other_paths, Rng& rng);

}  // namespace mapf
