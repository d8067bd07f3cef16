#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mapf/bench_io.hpp"
#include "mapf/lns.hpp"

namespace mapf {

/// One solver invocation, fully specified.
struct SolveRequest {
  std::filesystem::path map_path;
  std::filesystem::path scen_path;
  int agents = 1;
  SolverConfig config;
  std::optional<std::uint64_t> shuffle_agents_seed;  ///< shuffle scenario rows before taking m
};

/// Loads the instance, runs the solver, and flattens the outcome into a
/// RunRecord (sentinel costs on failure). The full result is returned for
/// callers that need the trace or weights.
RunRecord summarize(const SolveRequest& request, const RunResult& result);
RunResult solve_one(const SolveRequest& request);
Instance load_request_instance(const SolveRequest& request);

/// Batch description, read from a JSON file: the cross product of
/// maps x scens x agents x algorithms x budgets_s x k_values is run once
/// per seed. `scens` entries may use '*' wildcards, resolved against the
/// filesystem. If `seeds` is empty, seeds 0..repetitions-1 are used.
struct ExperimentSpec {
  std::vector<std::string> maps;
  std::vector<std::string> scens;
  std::vector<int> agents;
  std::vector<std::string> algorithms;
  std::vector<double> budgets_s;
  std::vector<int> k_values{32};
  std::vector<std::uint64_t> seeds;
  int repetitions = 1;
  int jobs = 1;
  int neighborhood_size = 8;
  double epsilon = 0.5;
  ClockMode clock = ClockMode::wall;
  double step_s = 1e-3;
};

ExperimentSpec parse_experiment_spec(const std::string& json_text);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

/// Expands a path-with-wildcards against the filesystem; plain paths pass
/// through. Results are sorted.
std::vector<std::filesystem::path> expand_glob(const std::string& pattern);

/// Mean and normal-approximation 95% confidence half-width over all
/// successful runs of one (map, algorithm, m, N, K, epsilon, budget) cell.
struct AggregateRow {
  std::string map;
  std::string algorithm;
  int agents = 0;
  int neighborhood = 0;
  int top_k = 0;
  double epsilon = 0.0;
  double budget_s = 0.0;
  int runs = 0;
  int failures = 0;
  double mean_final_cost = 0.0;
  double ci95_final_cost = 0.0;
  double mean_auc = 0.0;
  double ci95_auc = 0.0;
  double mean_iterations = 0.0;
};

std::vector<AggregateRow> aggregate_records(std::span<const RunRecord> records);
void write_aggregates_csv(std::span<const AggregateRow> rows,
                          const std::filesystem::path& path);

struct ExperimentResult {
  std::vector<RunRecord> runs;
  std::vector<AggregateRow> aggregates;
};

/// Runs the whole batch, `jobs` runs in parallel (never within a run).
/// A run that throws is recorded as a failed row; the batch continues.
ExperimentResult run_experiment(const ExperimentSpec& spec, std::ostream* progress = nullptr);

}  // namespace mapf
