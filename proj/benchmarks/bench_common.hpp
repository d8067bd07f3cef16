#pragma once

#include <memory>

#include "mapf/generate.hpp"
#include "mapf/instance.hpp"
#include "mapf/prioritized.hpp"

namespace benchsupport {

// One warm desk-scale fixture shared by the benchmarks: a 32x32 random map
// with a feasible 150-agent plan on it. The cache points into the instance,
// so members initialize in declaration order.
struct Fixture {
  mapf::Instance instance;
  mapf::DistTableCache dists;
  mapf::Plan plan;
  bool solved = false;

  explicit Fixture(mapf::Instance i) : instance(std::move(i)), dists(instance.map())
  {
    mapf::Rng rng(11);
    if (auto initial = mapf::initial_solution(instance, dists, rng)) {
      plan = std::move(*initial);
      solved = true;
    }
  }
};

inline Fixture& fixture()
{
  static std::unique_ptr<Fixture> f = [] {
    mapf::Rng rng(7);
    for (;;) {
      mapf::GridMap map = mapf::generate_map(mapf::MapStyle::random, 32, 32, 0.2, rng);
      try {
        const auto entries = mapf::generate_scenario(map, "bench.map", 150, rng);
        auto fixture =
            std::make_unique<Fixture>(mapf::make_instance(std::move(map), entries, 150));
        if (fixture->solved) return fixture;
      } catch (const std::invalid_argument&) {
      }
    }
  }();
  return *f;
}

}  // namespace benchsupport
