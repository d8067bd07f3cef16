#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mapf/generate.hpp"
#include "mapf/instance.hpp"
#include "mapf/rng.hpp"

namespace testsupport {

/// Grid from ASCII art: '.' passable, '@' blocked. Leading/trailing blank
/// lines and per-line indentation are stripped.
mapf::GridMap grid_from_ascii(const std::string& art);

/// Instance on an ASCII grid with agents given as ((sx, sy), (gx, gy)).
mapf::Instance instance_from_ascii(
    const std::string& art,
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& agents);

/// Random solvable instance: random map plus endpoint rows sampled from the
/// largest component (distinct starts, distinct goals).
mapf::Instance random_instance(int width, int height, double density, int agents,
                               mapf::Rng& rng);

}  // namespace testsupport
