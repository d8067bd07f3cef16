#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapf/instance.hpp"
#include "mapf/trace.hpp"

namespace mapf {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Moving-AI grid map format: `type octile`, `height H`, `width W`, `map`,
/// then H rows of W glyphs. '.' and 'G' are passable; '@', 'O' and 'T' are
/// blocked. Anything else, a dimension mismatch, or truncation raises
/// ParseError naming the offending line.
GridMap parse_map(const std::string& text);
GridMap load_map(const std::filesystem::path& path);

/// One row of a version-1 scenario file. Coordinates are x = column,
/// y = row. The optimal-length column is informational only (the benchmark
/// computes it for octile movement, not the cardinal moves used here).
struct ScenarioEntry {
  int bucket = 0;
  std::string map_name;
  int map_width = 0;
  int map_height = 0;
  int start_x = 0;
  int start_y = 0;
  int goal_x = 0;
  int goal_y = 0;
  double optimal_length = 0.0;
};

std::vector<ScenarioEntry> parse_scenario_entries(const std::string& text);

/// Builds an instance from the first m scenario rows, in file order.
/// Endpoint validity and start-to-goal reachability are checked; asking
/// for more agents than the file provides is an error, not a truncation.
Instance make_instance(GridMap map, std::span<const ScenarioEntry> entries, int m);
Instance parse_scenario(const std::string& text, GridMap map, int m);
Instance load_instance(const std::filesystem::path& map_path,
                       const std::filesystem::path& scen_path, int m);

/// Summary of one solver run, mirrored by the CSV and JSON writers.
/// Failed runs carry -1 sentinels in the cost fields and 0 elsewhere.
struct RunRecord {
  std::string map;
  std::string scenario;
  std::string algorithm;
  int agents = 0;
  int neighborhood = 0;
  int top_k = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  double budget_s = 0.0;
  long long initial_cost = -1;
  long long final_cost = -1;
  double auc = 0.0;
  long long iterations = 0;
  double success_rate = 0.0;
};

/// RFC 4180 output: CRLF records, quoting only where required.
void write_results_csv(std::span<const RunRecord> records, const std::filesystem::path& path);
void write_results_json(std::span<const RunRecord> records, const std::filesystem::path& path);
std::vector<RunRecord> read_results_json(const std::filesystem::path& path);

/// Trace file: one (time_s, cost) row per entry.
void write_trace_csv(const RunTrace& trace, const std::filesystem::path& path);

/// Shortest round-trip decimal rendering, locale-independent.
std::string format_double(double value);

}  // namespace mapf
