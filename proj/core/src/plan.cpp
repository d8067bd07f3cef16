#include "mapf/plan.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mapf {

int compute_delay(const Path& path, const std::vector<int>& dist_to_goal)
{
  return path.steps() - dist_to_goal[path.cells.front()];
}

void check_path(const GridMap& map, const Agent& agent, const Path& path)
{
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("path of agent " + std::to_string(agent.id) + ": " + why);
  };
  if (path.agent != agent.id) fail("agent id mismatch");
  if (path.cells.empty()) fail("empty");
  if (path.cells.front() != agent.start) fail("does not begin at the start");
  if (path.cells.back() != agent.goal) fail("does not end at the goal");
  for (std::size_t t = 0; t < path.cells.size(); ++t) {
    const int cell = path.cells[t];
    if (cell < 0 || cell >= map.size() || !map.passable(cell))
      fail("cell out of bounds or blocked at step " + std::to_string(t));
    if (t > 0) {
      const int prev = path.cells[t - 1];
      if (cell != prev) {
        const int dx = std::abs(map.x_of(cell) - map.x_of(prev));
        const int dy = std::abs(map.y_of(cell) - map.y_of(prev));
        if (dx + dy != 1) fail("teleport at step " + std::to_string(t));
      }
    }
  }
}

Plan Plan::from_paths(const Instance& instance, DistTableCache& dists, std::vector<Path> paths)
{
  if (static_cast<int>(paths.size()) != instance.num_agents())
    throw std::invalid_argument("Plan: expected one path per agent");
  Plan plan;
  plan.paths_ = std::move(paths);
  plan.delays_.resize(plan.paths_.size());
  plan.total_delay_ = 0;
  for (int i = 0; i < plan.num_agents(); ++i) {
    check_path(instance.map(), instance.agent(i), plan.paths_[i]);
    plan.delays_[i] = compute_delay(plan.paths_[i], dists.get(instance.agent(i).goal));
    plan.total_delay_ += plan.delays_[i];
  }
  return plan;
}

void Plan::replace_path(int agent, Path path, int new_delay)
{
  total_delay_ += new_delay - delays_[agent];
  delays_[agent] = new_delay;
  paths_[agent] = std::move(path);
}

long long Plan::recompute_total_delay(DistTableCache& dists) const
{
  long long total = 0;
  for (const Path& p : paths_)
    total += compute_delay(p, dists.get(p.cells.back()));
  return total;
}

}  // namespace mapf
