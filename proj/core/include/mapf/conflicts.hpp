#pragma once

#include <vector>

#include "mapf/instance.hpp"
#include "mapf/plan.hpp"

namespace mapf {

enum class ConflictKind { vertex, edge };

/// A vertex conflict records two agents on one cell at one step
/// (cell_a == cell_b); an edge conflict records an opposite-direction
/// traversal of one edge, with cell_a/cell_b the endpoints as seen from
/// agent_a. `time` is the step at which the collision occurs (for edge
/// conflicts, the step being entered).
struct Conflict {
  ConflictKind kind;
  int agent_a;
  int agent_b;
  int cell_a;
  int cell_b;
  int time;
};

/// Enumerates every vertex and edge conflict in the plan. Agents rest at
/// their goals after their paths end and still collide there. An empty
/// result means the plan is a solution. Structurally invalid paths throw
/// std::invalid_argument; conflicts are reported, not thrown.
std::vector<Conflict> validate_plan(const Instance& instance, const Plan& plan);

}  // namespace mapf
