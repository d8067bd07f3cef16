#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "mapf/bandit.hpp"
#include "mapf/instance.hpp"
#include "mapf/plan.hpp"
#include "mapf/reservation.hpp"
#include "mapf/rng.hpp"

namespace mapf {

/// Agents selected for destroy-and-repair. Exactly min(n, m) distinct
/// agents; the seed (when the heuristic has one) is always a member.
struct Neighborhood {
  std::vector<int> agents;
  std::optional<int> seed;
};

/// Seeds already used by the agent-based heuristic. Emptied when it holds
/// every agent or when a selected seed has zero delay.
using TabuList = std::unordered_set<int>;

enum class BanditKind { thompson, eps_greedy };

/// Uniform sample of n distinct agents. Throws std::invalid_argument when
/// n >= m.
Neighborhood random_destroy(const Instance& instance, int n, Rng& rng);

/// Picks a uniformly random vertex of degree > 2 and collects agents whose
/// paths cross the region around it, widening the region breadth-first one
/// layer at a time until n agents are found or the region stops growing;
/// pads with uniform random agents if still short. Returns std::nullopt
/// when the map has no vertex of degree > 2 (callers fall back to
/// random_destroy).
std::optional<Neighborhood> map_based_destroy(const Instance& instance, const Plan& plan,
                                              int n, Rng& rng);

/// Collects agents whose paths are crossed by time-forward random walks
/// started at random positions on the seed's path. A walk step is only
/// allowed onto cells from which the seed's goal is still reachable in
/// strictly fewer total steps than its current path, so walked cells trace
/// routes that could shorten the seed. Up to kWalkRestarts walks are run;
/// the result is padded with uniform random agents up to min(n, m).
/// `occupancy` must reflect every path of `plan`.
Neighborhood random_walk_neighborhood(const Instance& instance, DistTableCache& dists,
                                      const Plan& plan, const ReservationTable& occupancy,
                                      int seed_agent, int n, Rng& rng);

/// Convenience form that builds the occupancy table from the plan.
Neighborhood random_walk_neighborhood(const Instance& instance, DistTableCache& dists,
                                      const Plan& plan, int seed_agent, int n, Rng& rng);

inline constexpr int kWalkRestarts = 10;

/// Original agent-based heuristic: seed = the most delayed agent outside
/// the tabu list (ties to the lowest id), then a random-walk neighborhood
/// around it. The seed is added to the tabu list, which resets per its
/// invariant.
Neighborhood agent_based_destroy(const Instance& instance, DistTableCache& dists,
                                 const Plan& plan, const ReservationTable& occupancy,
                                 TabuList& tabu, int n, Rng& rng);

/// Agent ids sorted by delay descending (ties to the lowest id), truncated
/// to the k most delayed.
std::vector<int> top_k_delayed(const Plan& plan, int k);

/// Adaptive delay-based heuristic: ranks agents by delay, restricts seed
/// selection to the top-k set via the configured bandit over the per-agent
/// Beta posteriors, then grows a random-walk neighborhood around the seed.
/// Non-seed members need not come from the top-k set.
Neighborhood address_destroy(const Instance& instance, DistTableCache& dists,
                             const Plan& plan, const ReservationTable& occupancy, int k,
                             const BetaParams& params, BanditKind kind, double epsilon,
                             int n, Rng& rng);

}  // namespace mapf
