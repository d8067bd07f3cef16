#include "mapf/destroy.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace mapf {

namespace {

// Unique-membership collector preserving insertion order.
struct AgentSet {
  std::vector<int> ordered;
  std::unordered_set<int> members;

  bool insert(int agent)
  {
    if (!members.insert(agent).second) return false;
    ordered.push_back(agent);
    return true;
  }
  int size() const { return static_cast<int>(ordered.size()); }
};

void pad_with_random_agents(AgentSet& set, int target, int num_agents, Rng& rng)
{
  if (set.size() >= target) return;
  std::vector<int> rest;
  rest.reserve(num_agents - set.size());
  for (int i = 0; i < num_agents; ++i)
    if (!set.members.count(i)) rest.push_back(i);
  rest = sample_without_replacement(std::move(rest), target - set.size(), rng);
  for (const int a : rest) set.insert(a);
}

}  // namespace

Neighborhood random_destroy(const Instance& instance, int n, Rng& rng)
{
  const int m = instance.num_agents();
  if (n >= m)
    throw std::invalid_argument("random_destroy: neighborhood size must be below the agent count");
  std::vector<int> ids(m);
  std::iota(ids.begin(), ids.end(), 0);
  return Neighborhood{sample_without_replacement(std::move(ids), n, rng), std::nullopt};
}

std::optional<Neighborhood> map_based_destroy(const Instance& instance, const Plan& plan,
                                              int n, Rng& rng)
{
  const GridMap& map = instance.map();
  std::vector<int> junctions;
  for (int cell = 0; cell < map.size(); ++cell)
    if (map.passable(cell) && map.degree(cell) > 2) junctions.push_back(cell);
  if (junctions.empty()) return std::nullopt;
  const int origin = junctions[uniform_index(rng, junctions.size())];

  // Cell -> agents whose path visits it.
  std::vector<std::vector<int>> visitors(map.size());
  for (int i = 0; i < plan.num_agents(); ++i) {
    int prev = -1;
    for (const int cell : plan.path(i).cells) {
      if (cell != prev) visitors[cell].push_back(i);
      prev = cell;
    }
  }

  const int target = std::min(n, plan.num_agents());
  AgentSet found;
  std::vector<bool> in_region(map.size(), false);
  std::deque<int> frontier{origin};
  in_region[origin] = true;
  std::array<int, 4> adjacent;
  int rings = 0;
  while (!frontier.empty()) {
    // Absorb one breadth-first ring per round; the smallest region is the
    // origin plus its adjacent cells.
    std::deque<int> next;
    for (const int cell : frontier) {
      for (const int a : visitors[cell]) found.insert(a);
      const int count = map.neighbors(cell, adjacent);
      for (int i = 0; i < count; ++i) {
        if (!in_region[adjacent[i]]) {
          in_region[adjacent[i]] = true;
          next.push_back(adjacent[i]);
        }
      }
    }
    ++rings;
    if (rings >= 2 && found.size() >= target) break;
    frontier = std::move(next);
  }

  std::vector<int> agents = found.size() > target
                                ? sample_without_replacement(std::move(found.ordered), target, rng)
                                : std::move(found.ordered);
  AgentSet result;
  for (const int a : agents) result.insert(a);
  pad_with_random_agents(result, target, plan.num_agents(), rng);
  return Neighborhood{std::move(result.ordered), std::nullopt};
}

namespace {

void collect_walk_collisions(const ReservationTable& occupancy, int from, int to, int t_arrive,
                             AgentSet& out, std::vector<int>& scratch)
{
  scratch.clear();
  occupancy.collect_occupants(to, t_arrive, scratch);
  if (from != to) occupancy.collect_swappers(from, to, t_arrive - 1, scratch);
  for (const int a : scratch) out.insert(a);
}

}  // namespace

Neighborhood random_walk_neighborhood(const Instance& instance, DistTableCache& dists,
                                      const Plan& plan, const ReservationTable& occupancy,
                                      int seed_agent, int n, Rng& rng)
{
  const GridMap& map = instance.map();
  const Path& seed_path = plan.path(seed_agent);
  const auto& dist = dists.get(instance.agent(seed_agent).goal);
  const int upper = seed_path.steps();  // walked routes must beat the current length
  const int target = std::min(n, plan.num_agents());

  AgentSet collected;
  collected.insert(seed_agent);

  std::array<int, 4> adjacent;
  std::vector<int> eligible;
  std::vector<int> scratch;
  for (int attempt = 0; attempt < kWalkRestarts && collected.size() < target; ++attempt) {
    const int t0 = static_cast<int>(uniform_index(rng, seed_path.cells.size()));
    int loc = seed_path.cells[t0];
    for (int t = t0; collected.size() < target; ++t) {
      const int count = map.neighbors(loc, adjacent);
      eligible.clear();
      for (int i = 0; i <= count; ++i) {
        const int next = i < count ? adjacent[i] : loc;
        if (dist[next] != GridMap::kUnreachable && t + 1 + dist[next] < upper)
          eligible.push_back(next);
      }
      if (eligible.empty()) break;
      const int next = eligible[uniform_index(rng, eligible.size())];
      collect_walk_collisions(occupancy, loc, next, t + 1, collected, scratch);
      loc = next;
    }
  }

  pad_with_random_agents(collected, target, plan.num_agents(), rng);
  return Neighborhood{std::move(collected.ordered), seed_agent};
}

Neighborhood random_walk_neighborhood(const Instance& instance, DistTableCache& dists,
                                      const Plan& plan, int seed_agent, int n, Rng& rng)
{
  const ReservationTable occupancy = build_reservations(instance.map(), plan.paths());
  return random_walk_neighborhood(instance, dists, plan, occupancy, seed_agent, n, rng);
}

Neighborhood agent_based_destroy(const Instance& instance, DistTableCache& dists,
                                 const Plan& plan, const ReservationTable& occupancy,
                                 TabuList& tabu, int n, Rng& rng)
{
  const int m = plan.num_agents();
  if (static_cast<int>(tabu.size()) >= m) tabu.clear();
  int seed = -1;
  int seed_delay = -1;
  for (int i = 0; i < m; ++i) {
    if (tabu.count(i)) continue;
    if (plan.delay(i) > seed_delay) {
      seed = i;
      seed_delay = plan.delay(i);
    }
  }
  tabu.insert(seed);
  if (static_cast<int>(tabu.size()) == m || seed_delay == 0) tabu.clear();
  return random_walk_neighborhood(instance, dists, plan, occupancy, seed, n, rng);
}

std::vector<int> top_k_delayed(const Plan& plan, int k)
{
  std::vector<int> ids(plan.num_agents());
  std::iota(ids.begin(), ids.end(), 0);
  const int count = std::min<int>(k, plan.num_agents());
  std::partial_sort(ids.begin(), ids.begin() + count, ids.end(), [&](int a, int b) {
    if (plan.delay(a) != plan.delay(b)) return plan.delay(a) > plan.delay(b);
    return a < b;
  });
  ids.resize(count);
  return ids;
}

Neighborhood address_destroy(const Instance& instance, DistTableCache& dists,
                             const Plan& plan, const ReservationTable& occupancy, int k,
                             const BetaParams& params, BanditKind kind, double epsilon,
                             int n, Rng& rng)
{
  if (k < 1) throw std::invalid_argument("address_destroy: k must be at least 1");
  const std::vector<int> candidates = top_k_delayed(plan, k);
  const int seed = kind == BanditKind::thompson
                       ? select_thompson(params, candidates, rng)
                       : select_eps_greedy(params, candidates, epsilon, rng);
  return random_walk_neighborhood(instance, dists, plan, occupancy, seed, n, rng);
}

}  // namespace mapf
