#include "mapf/reservation.hpp"

#include <algorithm>

namespace mapf {

void ReservationTable::insert_path(const Path& path)
{
  for (int t = 0; t <= path.steps(); ++t) {
    const int cell = path.cells[t];
    auto& line = timelines_[cell];
    if (t >= static_cast<int>(line.size())) line.resize(t + 1, kEmpty);
    if (line[t] == kEmpty)
      line[t] = path.agent;
    else
      overflow_[overflow_key(cell, t)].push_back(path.agent);
  }
  const int goal = path.cells.back();
  if (rest_agent_[goal] == kEmpty) {
    rest_agent_[goal] = path.agent;
    rest_from_[goal] = path.steps();
  } else {
    rest_overflow_[goal].push_back({path.agent, path.steps()});
  }
  max_timed_step_ = std::max(max_timed_step_, path.steps());
}

void ReservationTable::remove_path(const Path& path)
{
  for (int t = 0; t <= path.steps(); ++t) {
    const int cell = path.cells[t];
    auto& line = timelines_[cell];
    if (t >= static_cast<int>(line.size())) continue;
    if (line[t] == path.agent) {
      line[t] = kEmpty;
      const auto it = overflow_.find(overflow_key(cell, t));
      if (it != overflow_.end()) {
        line[t] = it->second.back();
        it->second.pop_back();
        if (it->second.empty()) overflow_.erase(it);
      }
    } else {
      const auto it = overflow_.find(overflow_key(cell, t));
      if (it != overflow_.end()) {
        const auto pos = std::find(it->second.begin(), it->second.end(), path.agent);
        if (pos != it->second.end()) it->second.erase(pos);
        if (it->second.empty()) overflow_.erase(it);
      }
    }
  }
  const int goal = path.cells.back();
  if (rest_agent_[goal] == path.agent && rest_from_[goal] == path.steps()) {
    rest_agent_[goal] = kEmpty;
    const auto it = rest_overflow_.find(goal);
    if (it != rest_overflow_.end()) {
      rest_agent_[goal] = it->second.back().first;
      rest_from_[goal] = it->second.back().second;
      it->second.pop_back();
      if (it->second.empty()) rest_overflow_.erase(it);
    }
  } else {
    const auto it = rest_overflow_.find(goal);
    if (it != rest_overflow_.end()) {
      const auto pos = std::find(it->second.begin(), it->second.end(),
                                 std::make_pair(path.agent, path.steps()));
      if (pos != it->second.end()) it->second.erase(pos);
      if (it->second.empty()) rest_overflow_.erase(it);
    }
  }
}

bool ReservationTable::can_rest(int cell, int t) const
{
  if (rest_agent_[cell] != kEmpty) return false;
  const auto& line = timelines_[cell];
  for (int s = t; s < static_cast<int>(line.size()); ++s)
    if (line[s] != kEmpty) return false;
  return true;
}

bool ReservationTable::edge_blocked_overflow(int from, int to, int t) const
{
  // Slow path: some slot along this edge has co-occupants.
  thread_local std::vector<int> at_to, at_from;
  at_to.clear();
  at_from.clear();
  collect_timed(to, t, at_to);
  collect_timed(from, t + 1, at_from);
  for (const int a : at_to)
    if (std::find(at_from.begin(), at_from.end(), a) != at_from.end()) return true;
  return false;
}

void ReservationTable::collect_timed(int cell, int t, std::vector<int>& out) const
{
  const int occupant = slot(cell, t);
  if (occupant != kEmpty) out.push_back(occupant);
  if (!overflow_.empty()) {
    const auto it = overflow_.find(overflow_key(cell, t));
    if (it != overflow_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
}

void ReservationTable::collect_occupants(int cell, int t, std::vector<int>& out) const
{
  collect_timed(cell, t, out);
  // The arrival step itself is timed, so only strictly-later rests count.
  if (rest_agent_[cell] != kEmpty && rest_from_[cell] < t) out.push_back(rest_agent_[cell]);
  if (!rest_overflow_.empty()) {
    const auto it = rest_overflow_.find(cell);
    if (it != rest_overflow_.end()) {
      for (const auto& [agent, from_t] : it->second)
        if (from_t < t) out.push_back(agent);
    }
  }
}

void ReservationTable::collect_swappers(int from, int to, int t, std::vector<int>& out) const
{
  thread_local std::vector<int> at_to, at_from;
  at_to.clear();
  at_from.clear();
  collect_timed(to, t, at_to);
  collect_timed(from, t + 1, at_from);
  for (const int a : at_to)
    if (std::find(at_from.begin(), at_from.end(), a) != at_from.end()) out.push_back(a);
}

std::size_t ReservationTable::timed_count() const
{
  std::size_t n = 0;
  for (const auto& line : timelines_)
    for (const int occupant : line) n += occupant != kEmpty;
  for (const auto& [key, list] : overflow_) n += list.size();
  return n;
}

std::size_t ReservationTable::rest_count() const
{
  std::size_t n = 0;
  for (const int agent : rest_agent_) n += agent != kEmpty;
  for (const auto& [cell, list] : rest_overflow_) n += list.size();
  return n;
}

ReservationTable build_reservations(const GridMap& map, std::span<const Path> paths)
{
  ReservationTable table(map.size());
  for (const Path& p : paths) table.insert_path(p);
  return table;
}

}  // namespace mapf
