#include "mapf/grid_map.hpp"

#include <deque>
#include <stdexcept>

namespace mapf {

GridMap::GridMap(int width, int height, std::vector<std::uint8_t> passable)
    : width_(width), height_(height), passable_(std::move(passable))
{
  if (width_ <= 0 || height_ <= 0)
    throw std::invalid_argument("GridMap: dimensions must be positive");
  if (static_cast<int>(passable_.size()) != width_ * height_)
    throw std::invalid_argument("GridMap: passable mask size does not match dimensions");

  adjacency_.resize(passable_.size());
  for (int cell = 0; cell < size(); ++cell) {
    Adjacency& entry = adjacency_[cell];
    entry.count = 0;
    if (!passable_[cell]) continue;
    const int x = x_of(cell);
    const int y = y_of(cell);
    if (y > 0 && passable_[cell - width_]) entry.cells[entry.count++] = cell - width_;
    if (x + 1 < width_ && passable_[cell + 1]) entry.cells[entry.count++] = cell + 1;
    if (y + 1 < height_ && passable_[cell + width_])
      entry.cells[entry.count++] = cell + width_;
    if (x > 0 && passable_[cell - 1]) entry.cells[entry.count++] = cell - 1;
  }
}

int GridMap::passable_count() const
{
  int n = 0;
  for (const auto p : passable_) n += p != 0;
  return n;
}

std::vector<int> GridMap::shortest_distance_table(int goal) const
{
  if (goal < 0 || goal >= size() || !passable(goal))
    throw std::invalid_argument("shortest_distance_table: goal out of bounds or blocked");

  std::vector<int> dist(size(), kUnreachable);
  std::deque<int> queue;
  dist[goal] = 0;
  queue.push_back(goal);
  std::array<int, 4> next;
  while (!queue.empty()) {
    const int cell = queue.front();
    queue.pop_front();
    const int count = neighbors(cell, next);
    for (int i = 0; i < count; ++i) {
      if (dist[next[i]] == kUnreachable) {
        dist[next[i]] = dist[cell] + 1;
        queue.push_back(next[i]);
      }
    }
  }
  return dist;
}

const std::vector<int>& DistTableCache::get(int goal)
{
  auto it = tables_.find(goal);
  if (it == tables_.end())
    it = tables_.emplace(goal, map_->shortest_distance_table(goal)).first;
  return it->second;
}

}  // namespace mapf
