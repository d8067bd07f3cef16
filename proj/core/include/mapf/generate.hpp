#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapf/bench_io.hpp"
#include "mapf/grid_map.hpp"
#include "mapf/rng.hpp"

namespace mapf {

enum class MapStyle { random, rooms, caves, warehouse, city };

std::string map_style_name(MapStyle style);
std::optional<MapStyle> map_style_from_name(const std::string& name);

/// Synthesizes a grid in the given style. `obstacle_density` applies to the
/// random style only. Every style leaves the largest open area connected
/// enough for benchmark use, but callers should still sample endpoints from
/// one connected component.
GridMap generate_map(MapStyle style, int width, int height, double obstacle_density,
                     Rng& rng);

/// Samples `count` scenario rows on `map`: starts are distinct, goals are
/// distinct, and each pair lies in the largest connected component, so any
/// prefix of rows forms a solvable instance. The optimal-length column
/// holds the true 4-connected shortest distance. Throws std::invalid_argument
/// if the component cannot host that many rows.
std::vector<ScenarioEntry> generate_scenario(const GridMap& map, const std::string& map_name,
                                             int count, Rng& rng);

/// Renders in the benchmark file formats.
std::string map_to_text(const GridMap& map);
std::string scenario_to_text(std::span<const ScenarioEntry> entries);

}  // namespace mapf
