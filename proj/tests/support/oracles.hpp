#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapf/instance.hpp"
#include "mapf/plan.hpp"
#include "mapf/rng.hpp"

// Independent reference implementations used to derive expected values.
// Everything here recomputes results from first principles and must stay
// decoupled from the code paths under test.
namespace testsupport {

/// Shortest distances to `goal` by label-correcting relaxation (not BFS).
std::vector<int> relaxation_distances(const mapf::GridMap& map, int goal);

/// Occupied cell of a raw path at time t, resting at the final cell.
int path_position(const mapf::Path& path, int t);

/// Minimum arrival step for a single agent moving among fixed paths under
/// rest-at-goal semantics, by breadth-first search over (cell, time).
/// Returns std::nullopt when no feasible arrival exists within `horizon`.
std::optional<int> space_time_bfs(const mapf::GridMap& map, int start, int goal,
                                  std::span<const mapf::Path> others, int horizon);

/// Exact optimal sum of delays for a whole instance, by joint-state A*
/// where an agent may irrevocably park at its goal (paying nothing while
/// parked). `upper_bound` prunes states costlier than a known valid plan
/// (pass that plan's cost); exactness is preserved whenever the optimum is
/// at most the bound. Throws std::runtime_error if the search exceeds its
/// caps. Intended for tiny instances only.
long long optimal_sum_of_delays(const mapf::Instance& instance,
                                long long upper_bound = 1ll << 60,
                                int max_expansions = 4000000);

/// Strict RFC 4180 reader: CRLF record separators, balanced quotes, no
/// stray quotes in unquoted fields, uniform field count. Returns the
/// parsed rows; throws std::runtime_error on any violation.
std::vector<std::vector<std::string>> parse_rfc4180(const std::string& text);

/// Structurally valid random path for reservation-table tests: starts at a
/// random passable cell and makes `steps` random moves or waits.
mapf::Path random_valid_path(const mapf::GridMap& map, int agent, int steps, mapf::Rng& rng);

}  // namespace testsupport
