#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mapf {

/// 4-connected grid. Cells are addressed by row-major index
/// (cell = y * width + x); movement is allowed between orthogonally
/// adjacent passable cells, so the induced graph is undirected.
class GridMap {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  GridMap(int width, int height, std::vector<std::uint8_t> passable);

  int width() const { return width_; }
  int height() const { return height_; }
  int size() const { return width_ * height_; }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }
  bool passable(int cell) const { return passable_[cell] != 0; }
  bool passable_xy(int x, int y) const { return in_bounds(x, y) && passable(cell_at(x, y)); }

  int cell_at(int x, int y) const { return y * width_ + x; }
  int x_of(int cell) const { return cell % width_; }
  int y_of(int cell) const { return cell / width_; }

  /// Passable neighbors of `cell` in fixed order: up, right, down, left.
  /// Returns the count; out[0..count) are the neighbor cells.
  int neighbors(int cell, std::array<int, 4>& out) const
  {
    const auto& entry = adjacency_[cell];
    for (int i = 0; i < entry.count; ++i) out[i] = entry.cells[i];
    return entry.count;
  }

  /// Neighbor list without copying (same fixed order).
  std::span<const int> adjacent(int cell) const
  {
    const auto& entry = adjacency_[cell];
    return {entry.cells.data(), static_cast<std::size_t>(entry.count)};
  }

  /// Number of passable neighbors.
  int degree(int cell) const { return adjacency_[cell].count; }

  int passable_count() const;

  /// BFS distances (in steps) from every cell to `goal`.
  /// Unreachable cells hold kUnreachable. Throws std::invalid_argument
  /// if the goal is out of bounds or blocked.
  std::vector<int> shortest_distance_table(int goal) const;

 private:
  struct Adjacency {
    std::array<int, 4> cells;
    int count;
  };

  int width_;
  int height_;
  std::vector<std::uint8_t> passable_;
  std::vector<Adjacency> adjacency_;
};

/// Lazily computed per-goal distance tables. One cache is owned by one
/// solver run; the underlying map is shared read-only.
class DistTableCache {
 public:
  explicit DistTableCache(const GridMap& map) : map_(&map) {}

  const std::vector<int>& get(int goal);
  const GridMap& map() const { return *map_; }

 private:
  const GridMap* map_;
  std::unordered_map<int, std::vector<int>> tables_;
};

}  // namespace mapf
