#include "mapf/bench_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mapf {

namespace {

std::vector<std::string> split_lines(const std::string& text)
{
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

[[noreturn]] void fail(const std::string& what, std::size_t line_no)
{
  throw ParseError(what + " (line " + std::to_string(line_no + 1) + ")");
}

int parse_header_int(const std::vector<std::string>& lines, std::size_t line_no,
                     const std::string& key)
{
  if (line_no >= lines.size()) throw ParseError("truncated header: missing " + key);
  std::istringstream in(lines[line_no]);
  std::string word;
  int value = 0;
  if (!(in >> word >> value) || word != key || value <= 0)
    fail("expected '" + key + " <positive integer>'", line_no);
  return value;
}

std::string read_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

GridMap parse_map(const std::string& text)
{
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].rfind("type ", 0) != 0)
    throw ParseError("expected 'type octile' header (line 1)");
  const int height = parse_header_int(lines, 1, "height");
  const int width = parse_header_int(lines, 2, "width");
  if (lines.size() < 4 || lines[3] != "map") fail("expected 'map' header", 3);
  if (lines.size() < static_cast<std::size_t>(4 + height))
    throw ParseError("truncated map: expected " + std::to_string(height) + " rows");

  std::vector<std::uint8_t> passable;
  passable.reserve(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    const std::string& row = lines[4 + y];
    if (static_cast<int>(row.size()) != width)
      fail("row has " + std::to_string(row.size()) + " cells, expected " +
               std::to_string(width),
           4 + y);
    for (const char glyph : row) {
      switch (glyph) {
        case '.':
        case 'G': passable.push_back(1); break;
        case '@':
        case 'O':
        case 'T': passable.push_back(0); break;
        default: fail(std::string("unknown glyph '") + glyph + "'", 4 + y);
      }
    }
  }
  return GridMap(width, height, std::move(passable));
}

GridMap load_map(const std::filesystem::path& path)
{
  return parse_map(read_file(path));
}

std::vector<ScenarioEntry> parse_scenario_entries(const std::string& text)
{
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].rfind("version", 0) != 0)
    throw ParseError("expected 'version 1' header (line 1)");

  std::vector<ScenarioEntry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::istringstream in(lines[i]);
    ScenarioEntry e;
    if (!(in >> e.bucket >> e.map_name >> e.map_width >> e.map_height >> e.start_x >>
          e.start_y >> e.goal_x >> e.goal_y >> e.optimal_length))
      fail("unreadable scenario row", i);
    entries.push_back(std::move(e));
  }
  return entries;
}

Instance make_instance(GridMap map, std::span<const ScenarioEntry> entries, int m)
{
  if (m <= 0) throw ParseError("agent count must be positive");
  if (m > static_cast<int>(entries.size()))
    throw ParseError("requested " + std::to_string(m) + " agents but the scenario has only " +
                     std::to_string(entries.size()) + " rows");
  std::vector<Agent> agents;
  agents.reserve(m);
  for (int i = 0; i < m; ++i) {
    const ScenarioEntry& e = entries[i];
    if (!map.in_bounds(e.start_x, e.start_y) || !map.in_bounds(e.goal_x, e.goal_y))
      throw ParseError("scenario row " + std::to_string(i) + " is out of bounds");
    agents.push_back({i, map.cell_at(e.start_x, e.start_y), map.cell_at(e.goal_x, e.goal_y)});
  }
  try {
    return Instance(std::move(map), std::move(agents));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Instance parse_scenario(const std::string& text, GridMap map, int m)
{
  return make_instance(std::move(map), parse_scenario_entries(text), m);
}

Instance load_instance(const std::filesystem::path& map_path,
                       const std::filesystem::path& scen_path, int m)
{
  return parse_scenario(read_file(scen_path), load_map(map_path), m);
}

std::string format_double(double value)
{
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

namespace {

constexpr const char* kResultColumns[] = {
    "map",  "scenario",     "algorithm",  "m",          "N",
    "K",    "epsilon",      "seed",       "budget_s",   "initial_cost",
    "final_cost", "auc",    "iterations", "success_rate"};

std::string csv_escape(const std::string& field)
{
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_csv_row(std::ostream& out, std::span<const std::string> fields)
{
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(fields[i]);
  }
  out << "\r\n";
}

std::vector<std::string> record_fields(const RunRecord& r)
{
  return {r.map,
          r.scenario,
          r.algorithm,
          std::to_string(r.agents),
          std::to_string(r.neighborhood),
          std::to_string(r.top_k),
          format_double(r.epsilon),
          std::to_string(r.seed),
          format_double(r.budget_s),
          std::to_string(r.initial_cost),
          std::to_string(r.final_cost),
          format_double(r.auc),
          std::to_string(r.iterations),
          format_double(r.success_rate)};
}

std::ofstream open_out(const std::filesystem::path& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void write_results_csv(std::span<const RunRecord> records, const std::filesystem::path& path)
{
  auto out = open_out(path);
  std::vector<std::string> header(std::begin(kResultColumns), std::end(kResultColumns));
  write_csv_row(out, header);
  for (const RunRecord& r : records) write_csv_row(out, record_fields(r));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

nlohmann::json record_to_json(const RunRecord& r)
{
  return {{"map", r.map},
          {"scenario", r.scenario},
          {"algorithm", r.algorithm},
          {"m", r.agents},
          {"N", r.neighborhood},
          {"K", r.top_k},
          {"epsilon", r.epsilon},
          {"seed", r.seed},
          {"budget_s", r.budget_s},
          {"initial_cost", r.initial_cost},
          {"final_cost", r.final_cost},
          {"auc", r.auc},
          {"iterations", r.iterations},
          {"success_rate", r.success_rate}};
}

}  // namespace

void write_results_json(std::span<const RunRecord> records, const std::filesystem::path& path)
{
  nlohmann::json rows = nlohmann::json::array();
  for (const RunRecord& r : records) rows.push_back(record_to_json(r));
  auto out = open_out(path);
  out << rows.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<RunRecord> read_results_json(const std::filesystem::path& path)
{
  const nlohmann::json rows = nlohmann::json::parse(read_file(path));
  std::vector<RunRecord> records;
  for (const auto& row : rows) {
    RunRecord r;
    r.map = row.at("map");
    r.scenario = row.at("scenario");
    r.algorithm = row.at("algorithm");
    r.agents = row.at("m");
    r.neighborhood = row.at("N");
    r.top_k = row.at("K");
    r.epsilon = row.at("epsilon");
    r.seed = row.at("seed");
    r.budget_s = row.at("budget_s");
    r.initial_cost = row.at("initial_cost");
    r.final_cost = row.at("final_cost");
    r.auc = row.at("auc");
    r.iterations = row.at("iterations");
    r.success_rate = row.at("success_rate");
    records.push_back(std::move(r));
  }
  return records;
}

void write_trace_csv(const RunTrace& trace, const std::filesystem::path& path)
{
  auto out = open_out(path);
  write_csv_row(out, std::vector<std::string>{"time_s", "cost"});
  for (const TraceEntry& e : trace.entries)
    write_csv_row(out, std::vector<std::string>{format_double(e.time_s),
                                                std::to_string(e.cost)});
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace mapf
