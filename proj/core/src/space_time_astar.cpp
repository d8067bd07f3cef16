#include "mapf/space_time_astar.hpp"

#include <algorithm>

namespace mapf {

namespace {

struct OpenOrder {
  bool operator()(const SearchScratch::OpenEntry& a, const SearchScratch::OpenEntry& b) const
  {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;  // deeper first
    return a.seq > b.seq;
  }
};

}  // namespace

std::optional<Path> plan_path(const GridMap& map, const std::vector<int>& dist_to_goal,
                              const ReservationTable& table, const PathQuery& query,
                              SearchScratch& scratch)
{
  if (dist_to_goal[query.start] == GridMap::kUnreachable) return std::nullopt;
  if (table.vertex_blocked(query.start, 0)) return std::nullopt;

  auto& nodes = scratch.nodes;
  auto& heap = scratch.heap;
  nodes.clear();
  heap.clear();

  // Epoch-stamped visited table over (cell, t) up to the horizon.
  const std::size_t states =
      static_cast<std::size_t>(query.horizon + 1) * static_cast<std::size_t>(map.size());
  if (scratch.visited_epoch.size() < states) scratch.visited_epoch.resize(states, 0);
  const std::uint32_t epoch = ++scratch.epoch;
  const auto visit = [&](int cell, int t) {
    auto& stamp = scratch.visited_epoch[static_cast<std::size_t>(t) * map.size() + cell];
    if (stamp == epoch) return false;
    stamp = epoch;
    return true;
  };

  const OpenOrder order;
  const auto push = [&](SearchScratch::OpenEntry entry) {
    heap.push_back(entry);
    std::push_heap(heap.begin(), heap.end(), order);
  };
  const auto pop = [&] {
    std::pop_heap(heap.begin(), heap.end(), order);
    const auto top = heap.back();
    heap.pop_back();
    return top;
  };

  visit(query.start, 0);
  nodes.push_back({query.start, 0, -1});
  std::uint32_t seq = 0;
  push({dist_to_goal[query.start], 0, seq++, 0});

  while (!heap.empty()) {
    const auto entry = pop();
    const auto node = nodes[entry.node];

    if (node.cell == query.goal && table.can_rest(node.cell, node.t)) {
      Path path;
      path.agent = query.agent;
      path.cells.resize(node.t + 1);
      for (std::int32_t n = static_cast<std::int32_t>(entry.node); n >= 0; n = nodes[n].parent)
        path.cells[nodes[n].t] = nodes[n].cell;
      return path;
    }

    const int nt = node.t + 1;
    if (nt > query.horizon) continue;

    const auto adjacent = map.adjacent(node.cell);
    const int count = static_cast<int>(adjacent.size());
    for (int i = 0; i <= count; ++i) {
      const int next = i < count ? adjacent[i] : node.cell;  // wait move last
      const int h = dist_to_goal[next];
      if (h == GridMap::kUnreachable || nt + h > query.horizon) continue;
      if (table.vertex_blocked(next, nt)) continue;
      if (next != node.cell && table.edge_blocked(node.cell, next, node.t)) continue;
      if (!visit(next, nt)) continue;
      nodes.push_back({next, nt, static_cast<std::int32_t>(entry.node)});
      push({nt + h, nt, seq++, static_cast<std::uint32_t>(nodes.size() - 1)});
    }
  }
  return std::nullopt;
}

std::optional<Path> plan_path(const GridMap& map, const std::vector<int>& dist_to_goal,
                              const ReservationTable& table, const PathQuery& query)
{
  SearchScratch scratch;
  return plan_path(map, dist_to_goal, table, query, scratch);
}

}  // namespace mapf
