#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "mapf/plan.hpp"

namespace mapf {

/// Space-time occupancy of a set of paths: timed vertex occupancy for every
/// step of every inserted path, plus a rest reservation on each path's goal
/// from its arrival step onward. Edge traversals are derived from the timed
/// occupancy (a swap is the same agent seen on both endpoints in crossed
/// order), which also lets callers recover *which* agents collide with a
/// probe move. Inserting and then removing a path restores the prior state.
///
/// Storage is a per-cell timeline (one slot per step) with an overflow list
/// for the rare case of co-occupying paths from a conflicting input set, so
/// the hot queries are array reads.
class ReservationTable {
 public:
  explicit ReservationTable(int map_size)
      : timelines_(map_size), rest_agent_(map_size, kEmpty), rest_from_(map_size, 0)
  {
  }

  void insert_path(const Path& path);
  void remove_path(const Path& path);

  /// Cell occupied at step t, by a timed reservation or a resting agent.
  bool vertex_blocked(int cell, int t) const
  {
    if (rest_agent_[cell] != kEmpty && rest_from_[cell] <= t) return true;
    const auto& line = timelines_[cell];
    return t < static_cast<int>(line.size()) && line[t] != kEmpty;
  }

  /// Moving from -> to across steps t -> t+1 would swap with another agent.
  bool edge_blocked(int from, int to, int t) const
  {
    const int at_to = slot(to, t);
    if (at_to == kEmpty) return false;
    const int at_from = slot(from, t + 1);
    if (at_from == kEmpty) return false;
    if (at_to == at_from) return true;
    if (overflow_.empty()) return false;
    return edge_blocked_overflow(from, to, t);
  }

  /// No reservation touches `cell` at any step >= t, so an agent arriving
  /// at t may rest there forever.
  bool can_rest(int cell, int t) const;

  /// Latest step with a timed vertex reservation (-1 if none). May be
  /// conservative (too high) after removals; queries stay exact.
  int max_timed_step() const { return max_timed_step_; }

  /// Agents occupying (cell, t), including resting agents.
  void collect_occupants(int cell, int t, std::vector<int>& out) const;

  /// Agents that would swap with a from -> to move across steps t -> t+1.
  void collect_swappers(int from, int to, int t, std::vector<int>& out) const;

  bool empty() const { return timed_count() == 0 && rest_count() == 0; }
  std::size_t timed_count() const;
  std::size_t rest_count() const;

 private:
  static constexpr int kEmpty = -1;

  int slot(int cell, int t) const
  {
    const auto& line = timelines_[cell];
    return t < static_cast<int>(line.size()) ? line[t] : kEmpty;
  }

  bool edge_blocked_overflow(int from, int to, int t) const;
  void collect_timed(int cell, int t, std::vector<int>& out) const;
  std::int64_t overflow_key(int cell, int t) const
  {
    return static_cast<std::int64_t>(t) * static_cast<int>(timelines_.size()) + cell;
  }

  std::vector<std::vector<int>> timelines_;  // [cell][t] -> agent or kEmpty
  std::vector<int> rest_agent_;              // [cell] -> resting agent or kEmpty
  std::vector<int> rest_from_;               // [cell] -> rest start step
  // Secondary occupants when inputs themselves conflict.
  std::unordered_map<std::int64_t, std::vector<int>> overflow_;
  std::unordered_map<int, std::vector<std::pair<int, int>>> rest_overflow_;
  int max_timed_step_ = -1;
};

/// Table blocking every vertex occupancy, every traversed edge's reverse,
/// and each goal cell after its path's completion.
ReservationTable build_reservations(const GridMap& map, std::span<const Path> paths);

}  // namespace mapf
