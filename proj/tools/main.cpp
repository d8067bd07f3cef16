#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mapf/bench_io.hpp"
#include "mapf/experiment.hpp"
#include "mapf/generate.hpp"
#include "mapf/lns.hpp"

namespace {

// Exit codes: 0 success, 2 bad flags, 3 input parse error,
// 4 no initial solution, 5 output/io error.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitNoSolution = 4;
constexpr int kExitIo = 5;

struct SolveArgs {
  std::string map_path;
  std::string scen_path;
  int agents = 1;
  std::string algorithm = "address_ts";
  double time_budget = 15.0;
  int neighborhood = 8;
  int top_k = 32;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  std::string trace_path;
  std::string out_path;
  std::string format = "csv";
  std::string clock = "wall";
  double virtual_step = 1e-3;
  std::optional<std::uint64_t> shuffle_agents;
  bool validate = false;
};

int run_solve(const SolveArgs& args)
{
  const auto algorithm = mapf::algorithm_from_name(args.algorithm);
  if (!algorithm) {
    std::cerr << "unknown algorithm: " << args.algorithm << "\n";
    return kExitUsage;
  }

  mapf::SolveRequest request;
  request.map_path = args.map_path;
  request.scen_path = args.scen_path;
  request.agents = args.agents;
  request.shuffle_agents_seed = args.shuffle_agents;
  request.config.algorithm = *algorithm;
  request.config.neighborhood_size = args.neighborhood;
  request.config.top_k = args.top_k;
  request.config.epsilon = args.epsilon;
  request.config.time_budget_s = args.time_budget;
  request.config.seed = args.seed;
  request.config.clock =
      args.clock == "virtual" ? mapf::ClockMode::fixed_step : mapf::ClockMode::wall;
  request.config.step_s = args.virtual_step;
  request.config.validate_accepted = args.validate;

  mapf::RunResult result;
  try {
    result = mapf::solve_one(request);
  } catch (const mapf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  }

  if (!result.ok) {
    std::cerr << "solver failed: " << result.error << "\n";
    return kExitNoSolution;
  }

  const mapf::Metrics metrics =
      mapf::snapshot_metrics(result.trace, request.config.time_budget_s);
  std::cout << "algorithm = " << args.algorithm << ", agents = " << args.agents
            << ", initial cost = " << result.initial_cost << "\n";
  std::cout << "final cost = " << metrics.final_cost
            << ", AUC = " << mapf::format_double(metrics.auc)
            << ", iterations = " << metrics.iterations
            << ", success rate = " << mapf::format_double(metrics.success_rate) << "\n";

  try {
    if (!args.trace_path.empty()) mapf::write_trace_csv(result.trace, args.trace_path);
    if (!args.out_path.empty()) {
      const mapf::RunRecord record = mapf::summarize(request, result);
      if (args.format == "json")
        mapf::write_results_json({&record, 1}, args.out_path);
      else
        mapf::write_results_csv({&record, 1}, args.out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_experiment_cmd(const std::string& spec_path, const std::string& out_dir,
                       std::optional<int> jobs_override)
{
  mapf::ExperimentSpec spec;
  try {
    spec = mapf::load_experiment_spec(spec_path);
  } catch (const std::exception& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitParse;
  }
  if (jobs_override) spec.jobs = *jobs_override;

  const mapf::ExperimentResult result = mapf::run_experiment(spec, &std::cerr);

  try {
    const std::filesystem::path dir = out_dir;
    std::filesystem::create_directories(dir);
    mapf::write_results_csv(result.runs, dir / "runs.csv");
    mapf::write_results_json(result.runs, dir / "runs.json");
    mapf::write_aggregates_csv(result.aggregates, dir / "aggregates.csv");
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return kExitIo;
  }

  int failures = 0;
  for (const auto& run : result.runs) failures += run.final_cost < 0;
  std::cout << result.runs.size() << " runs, " << failures << " failed; results in "
            << out_dir << "\n";
  return kExitOk;
}

int run_gen_map(const std::string& style_name, int width, int height, double density,
                std::uint64_t seed, const std::string& out_path)
{
  const auto style = mapf::map_style_from_name(style_name);
  if (!style) {
    std::cerr << "unknown map style: " << style_name << "\n";
    return kExitUsage;
  }
  mapf::Rng rng(seed);
  const mapf::GridMap map = mapf::generate_map(*style, width, height, density, rng);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitIo;
  }
  out << mapf::map_to_text(map);
  return kExitOk;
}

int run_gen_scen(const std::string& map_path, int count, std::uint64_t seed,
                 const std::string& out_path)
{
  const mapf::GridMap map = mapf::load_map(map_path);
  mapf::Rng rng(seed);
  const auto entries = mapf::generate_scenario(
      map, std::filesystem::path(map_path).filename().string(), count, rng);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitIo;
  }
  out << mapf::scenario_to_text(entries);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Anytime multi-agent path finding with large neighborhood search"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Run one solver configuration");
  solve->add_option("--map", solve_args.map_path, "Map file (.map)")->required();
  solve->add_option("--scen", solve_args.scen_path, "Scenario file (.scen)")->required();
  solve->add_option("--agents", solve_args.agents, "Number of agents (first rows)")
      ->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("--algorithm", solve_args.algorithm,
                    "One of: address_ts, address_eg, lns_adaptive, lns_agent_only, "
                    "lns_adaptive_plus_address")
      ->required();
  solve->add_option("--time-budget", solve_args.time_budget, "Budget in seconds")
      ->required()
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--neighborhood-size", solve_args.neighborhood, "Agents per repair");
  solve->add_option("--k", solve_args.top_k, "Top-K candidate pool")
      ->check(CLI::PositiveNumber);
  solve->add_option("--epsilon", solve_args.epsilon, "Exploration rate")
      ->check(CLI::Range(0.0, 1.0));
  solve->add_option("--seed", solve_args.seed, "Random seed");
  solve->add_option("--trace", solve_args.trace_path, "Write the (time, cost) trace here");
  solve->add_option("--out", solve_args.out_path, "Write the summary record here");
  solve->add_option("--format", solve_args.format, "Summary format")
      ->check(CLI::IsMember({"csv", "json"}));
  solve->add_option("--clock", solve_args.clock,
                    "wall: monotonic time; virtual: fixed step per iteration "
                    "(bit-reproducible runs)")
      ->check(CLI::IsMember({"wall", "virtual"}));
  solve->add_option("--virtual-step", solve_args.virtual_step,
                    "Virtual seconds per iteration with --clock virtual");
  solve->add_option("--shuffle-agents", solve_args.shuffle_agents,
                    "Shuffle scenario rows with this seed before taking the first m");
  solve->add_flag("--validate", solve_args.validate,
                  "Re-validate the plan after every accepted iteration");

  std::string spec_path, out_dir = "results";
  std::optional<int> jobs_override;
  CLI::App* experiment = app.add_subcommand("experiment", "Run a batch from a JSON spec");
  experiment->add_option("--spec", spec_path, "Experiment spec (JSON)")->required();
  experiment->add_option("--out-dir", out_dir, "Output directory");
  experiment->add_option("--jobs", jobs_override, "Parallel runs (overrides the spec)");

  std::string style = "random", gen_map_out;
  int gen_width = 32, gen_height = 32;
  double gen_density = 0.2;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "Generate benchmark-format inputs");
  CLI::App* gen_map = gen->add_subcommand("map", "Generate a map file");
  gen_map->add_option("--style", style, "random, rooms, caves, warehouse, city");
  gen_map->add_option("--width", gen_width)->check(CLI::PositiveNumber);
  gen_map->add_option("--height", gen_height)->check(CLI::PositiveNumber);
  gen_map->add_option("--obstacle-density", gen_density, "Random style only")
      ->check(CLI::Range(0.0, 0.9));
  gen_map->add_option("--seed", gen_seed);
  gen_map->add_option("--out", gen_map_out, "Output path")->required();

  std::string scen_map_path, gen_scen_out;
  int gen_count = 200;
  std::uint64_t gen_scen_seed = 0;
  CLI::App* gen_scen = gen->add_subcommand("scen", "Generate a scenario file for a map");
  gen_scen->add_option("--map", scen_map_path, "Map file")->required();
  gen_scen->add_option("--count", gen_count, "Rows to generate")->check(CLI::PositiveNumber);
  gen_scen->add_option("--seed", gen_scen_seed);
  gen_scen->add_option("--out", gen_scen_out, "Output path")->required();
  gen->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (experiment->parsed()) return run_experiment_cmd(spec_path, out_dir, jobs_override);
    if (gen_map->parsed()) return run_gen_map(style, gen_width, gen_height, gen_density,
                                              gen_seed, gen_map_out);
    if (gen_scen->parsed())
      return run_gen_scen(scen_map_path, gen_count, gen_scen_seed, gen_scen_out);
  } catch (const mapf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
