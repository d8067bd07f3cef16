#include "fixtures.hpp"

#include <sstream>
#include <stdexcept>

namespace testsupport {

mapf::GridMap grid_from_ascii(const std::string& art)
{
  std::vector<std::string> rows;
  std::istringstream in(art);
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed;
    for (const char c : line)
      if (c == '.' || c == '@') trimmed += c;
    if (!trimmed.empty()) rows.push_back(trimmed);
  }
  if (rows.empty()) throw std::invalid_argument("grid_from_ascii: no rows");
  const int width = static_cast<int>(rows[0].size());
  std::vector<std::uint8_t> passable;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != width)
      throw std::invalid_argument("grid_from_ascii: ragged rows");
    for (const char c : row) passable.push_back(c == '.' ? 1 : 0);
  }
  return mapf::GridMap(width, static_cast<int>(rows.size()), std::move(passable));
}

mapf::Instance instance_from_ascii(
    const std::string& art,
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& agents)
{
  mapf::GridMap map = grid_from_ascii(art);
  std::vector<mapf::Agent> list;
  int id = 0;
  for (const auto& [start, goal] : agents) {
    list.push_back({id++, map.cell_at(start.first, start.second),
                    map.cell_at(goal.first, goal.second)});
  }
  return mapf::Instance(std::move(map), std::move(list));
}

mapf::Instance random_instance(int width, int height, double density, int agents,
                               mapf::Rng& rng)
{
  for (;;) {
    mapf::GridMap map = mapf::generate_map(mapf::MapStyle::random, width, height, density, rng);
    try {
      auto entries = mapf::generate_scenario(map, "test", agents, rng);
      return mapf::make_instance(std::move(map), entries, agents);
    } catch (const std::invalid_argument&) {
      // component too small for this many agents; redraw the map
    }
  }
}

}  // namespace testsupport
