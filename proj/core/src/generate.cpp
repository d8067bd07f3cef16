#include "mapf/generate.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace mapf {

std::string map_style_name(MapStyle style)
{
  switch (style) {
    case MapStyle::random: return "random";
    case MapStyle::rooms: return "rooms";
    case MapStyle::caves: return "caves";
    case MapStyle::warehouse: return "warehouse";
    case MapStyle::city: return "city";
  }
  return "unknown";
}

std::optional<MapStyle> map_style_from_name(const std::string& name)
{
  for (const MapStyle s : {MapStyle::random, MapStyle::rooms, MapStyle::caves,
                           MapStyle::warehouse, MapStyle::city}) {
    if (map_style_name(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

using Mask = std::vector<std::uint8_t>;

int at(int x, int y, int w) { return y * w + x; }

Mask random_mask(int w, int h, double density, Rng& rng)
{
  Mask mask(static_cast<std::size_t>(w) * h, 1);
  for (auto& cell : mask)
    if (uniform_unit(rng) < density) cell = 0;
  return mask;
}

// Rectangular rooms on a grid skeleton with door gaps punched into walls.
Mask rooms_mask(int w, int h, Rng& rng)
{
  Mask mask(static_cast<std::size_t>(w) * h, 1);
  const int room = 8;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (x % room == 0 || y % room == 0) mask[at(x, y, w)] = 0;
  // Punch 1-2 doors per wall segment.
  for (int y = room; y < h; y += room) {
    for (int x0 = 0; x0 < w; x0 += room) {
      const int span = std::min(room - 1, w - x0 - 1);
      if (span <= 0) continue;
      const int doors = 1 + static_cast<int>(uniform_index(rng, 2));
      for (int d = 0; d < doors; ++d)
        mask[at(x0 + 1 + static_cast<int>(uniform_index(rng, span)), y, w)] = 1;
    }
  }
  for (int x = room; x < w; x += room) {
    for (int y0 = 0; y0 < h; y0 += room) {
      const int span = std::min(room - 1, h - y0 - 1);
      if (span <= 0) continue;
      const int doors = 1 + static_cast<int>(uniform_index(rng, 2));
      for (int d = 0; d < doors; ++d)
        mask[at(x, y0 + 1 + static_cast<int>(uniform_index(rng, span)), w)] = 1;
    }
  }
  return mask;
}

// Cellular-automata caves: random seed mask smoothed by majority voting.
Mask caves_mask(int w, int h, Rng& rng)
{
  Mask mask = random_mask(w, h, 0.38, rng);
  Mask next(mask.size());
  for (int round = 0; round < 4; ++round) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        int open = 0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = x + dx, ny = y + dy;
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
            open += mask[at(nx, ny, w)];
          }
        }
        next[at(x, y, w)] = open >= 5 ? 1 : 0;
      }
    }
    mask.swap(next);
  }
  return mask;
}

// Shelf blocks separated by aisles, with a free corridor along the border.
Mask warehouse_mask(int w, int h, Rng&)
{
  Mask mask(static_cast<std::size_t>(w) * h, 1);
  const int shelf_w = 10, shelf_h = 2, aisle = 2, margin = 2;
  for (int y0 = margin; y0 + shelf_h <= h - margin; y0 += shelf_h + aisle) {
    for (int x0 = margin; x0 + shelf_w <= w - margin; x0 += shelf_w + aisle) {
      for (int y = y0; y < y0 + shelf_h; ++y)
        for (int x = x0; x < x0 + shelf_w; ++x) mask[at(x, y, w)] = 0;
    }
  }
  return mask;
}

// City blocks: building squares on a street grid, a few blocks left open
// as plazas.
Mask city_mask(int w, int h, Rng& rng)
{
  Mask mask(static_cast<std::size_t>(w) * h, 1);
  const int block = 6, street = 2;
  for (int y0 = street; y0 + block <= h; y0 += block + street) {
    for (int x0 = street; x0 + block <= w; x0 += block + street) {
      if (uniform_unit(rng) < 0.12) continue;  // plaza
      for (int y = y0; y < y0 + block; ++y)
        for (int x = x0; x < x0 + block; ++x) mask[at(x, y, w)] = 0;
    }
  }
  return mask;
}

std::vector<int> largest_component(const GridMap& map)
{
  std::vector<int> component(map.size(), -1);
  std::vector<int> best;
  std::array<int, 4> adjacent;
  int label = 0;
  for (int cell = 0; cell < map.size(); ++cell) {
    if (!map.passable(cell) || component[cell] != -1) continue;
    std::vector<int> cells;
    std::deque<int> queue{cell};
    component[cell] = label;
    while (!queue.empty()) {
      const int c = queue.front();
      queue.pop_front();
      cells.push_back(c);
      const int count = map.neighbors(c, adjacent);
      for (int i = 0; i < count; ++i) {
        if (component[adjacent[i]] == -1) {
          component[adjacent[i]] = label;
          queue.push_back(adjacent[i]);
        }
      }
    }
    if (cells.size() > best.size()) best = std::move(cells);
    ++label;
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

GridMap generate_map(MapStyle style, int width, int height, double obstacle_density, Rng& rng)
{
  if (width <= 2 || height <= 2)
    throw std::invalid_argument("generate_map: dimensions too small");
  Mask mask;
  switch (style) {
    case MapStyle::random: mask = random_mask(width, height, obstacle_density, rng); break;
    case MapStyle::rooms: mask = rooms_mask(width, height, rng); break;
    case MapStyle::caves: mask = caves_mask(width, height, rng); break;
    case MapStyle::warehouse: mask = warehouse_mask(width, height, rng); break;
    case MapStyle::city: mask = city_mask(width, height, rng); break;
  }
  return GridMap(width, height, std::move(mask));
}

std::vector<ScenarioEntry> generate_scenario(const GridMap& map, const std::string& map_name,
                                             int count, Rng& rng)
{
  const std::vector<int> component = largest_component(map);
  if (static_cast<int>(component.size()) < count)
    throw std::invalid_argument("generate_scenario: component holds only " +
                                std::to_string(component.size()) + " cells, need " +
                                std::to_string(count));

  const std::vector<int> starts = sample_without_replacement(component, count, rng);
  const std::vector<int> goals = sample_without_replacement(component, count, rng);

  std::vector<ScenarioEntry> entries;
  entries.reserve(count);
  std::unordered_map<int, std::vector<int>> dist_cache;
  for (int i = 0; i < count; ++i) {
    auto it = dist_cache.find(goals[i]);
    if (it == dist_cache.end())
      it = dist_cache.emplace(goals[i], map.shortest_distance_table(goals[i])).first;
    ScenarioEntry e;
    e.bucket = i / 10;
    e.map_name = map_name;
    e.map_width = map.width();
    e.map_height = map.height();
    e.start_x = map.x_of(starts[i]);
    e.start_y = map.y_of(starts[i]);
    e.goal_x = map.x_of(goals[i]);
    e.goal_y = map.y_of(goals[i]);
    e.optimal_length = static_cast<double>(it->second[starts[i]]);
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string map_to_text(const GridMap& map)
{
  std::ostringstream out;
  out << "type octile\n";
  out << "height " << map.height() << "\n";
  out << "width " << map.width() << "\n";
  out << "map\n";
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x)
      out << (map.passable(map.cell_at(x, y)) ? '.' : '@');
    out << "\n";
  }
  return out.str();
}

std::string scenario_to_text(std::span<const ScenarioEntry> entries)
{
  std::ostringstream out;
  out << "version 1\n";
  for (const ScenarioEntry& e : entries) {
    out << e.bucket << '\t' << e.map_name << '\t' << e.map_width << '\t' << e.map_height
        << '\t' << e.start_x << '\t' << e.start_y << '\t' << e.goal_x << '\t' << e.goal_y
        << '\t' << format_double(e.optimal_length) << '\n';
  }
  return out.str();
}

}  // namespace mapf
