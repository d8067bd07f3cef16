#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapf/bandit.hpp"
#include "mapf/destroy.hpp"
#include "mapf/instance.hpp"
#include "mapf/plan.hpp"
#include "mapf/prioritized.hpp"
#include "mapf/trace.hpp"

namespace mapf {

enum class Algorithm {
  address_ts,                ///< delay-based adaptive destroy, Thompson Sampling
  address_eg,                ///< delay-based adaptive destroy, epsilon-greedy
  lns_adaptive,              ///< roulette over agent-based / map-based / random
  lns_agent_only,            ///< agent-based heuristic only (stationary)
  lns_adaptive_plus_address  ///< roulette over all four destroy heuristics
};

std::string algorithm_name(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_name(const std::string& name);
std::vector<std::string> algorithm_names();

/// How the solver measures elapsed time. `wall` uses a monotonic clock;
/// `fixed_step` advances a virtual clock by step_s per iteration (and for
/// the initial solution), which makes runs and traces bit-reproducible for
/// a given seed.
enum class ClockMode { wall, fixed_step };

struct SolverConfig {
  Algorithm algorithm = Algorithm::address_ts;
  int neighborhood_size = 8;  ///< N, clamped to the agent count at run time
  int top_k = 32;             ///< K, candidate pool for the adaptive heuristic
  double epsilon = 0.5;
  double time_budget_s = 15.0;
  std::uint64_t seed = 0;
  ClockMode clock = ClockMode::wall;
  double step_s = 1e-3;  ///< virtual seconds per iteration in fixed_step mode
  int max_restarts = 10;
  double weight_gamma = SelectionWeights::kDefaultGamma;
  double weight_floor = SelectionWeights::kDefaultFloor;
  bool validate_accepted = false;  ///< re-validate the plan on every acceptance
  bool log_weights = false;        ///< record roulette weights at each acceptance
};

struct WeightSnapshot {
  double time_s;
  std::vector<double> weights;
};

/// Names of the roulette arms, index-aligned with SelectionWeights.
std::vector<std::string> arm_names(Algorithm algorithm);

struct RunResult {
  bool ok = false;
  std::string error;

  Plan plan;
  RunTrace trace;
  BetaParams posteriors;     ///< per-agent seed posteriors (adaptive destroy modes)
  SelectionWeights weights;  ///< roulette weights (baseline modes)
  std::vector<WeightSnapshot> weight_log;

  long long initial_cost = -1;
  long long final_cost = -1;
  long long iterations = 0;
  long long accepted = 0;
  double elapsed_s = 0.0;
};

/// Anytime loop with the adaptive delay-based destroy heuristic: per-agent
/// Beta posteriors start at (1, 1); each iteration destroys a neighborhood
/// around a bandit-selected seed from the top-K most delayed agents,
/// repairs it with prioritized planning, and accepts only strict cost
/// improvements. The seed's alpha is incremented on acceptance, its beta
/// otherwise (repair failure included).
RunResult run_address(const Instance& instance, const SolverConfig& config);

/// Anytime loop with destroy heuristics chosen by roulette-wheel selection
/// (or the agent-based heuristic alone). The chosen arm's weight is updated
/// with the iteration's cost improvement. In lns_adaptive_plus_address mode
/// the adaptive heuristic joins as a fourth arm with its own posteriors.
RunResult run_lns_baseline(const Instance& instance, const SolverConfig& config);

/// Dispatches on config.algorithm.
RunResult run_solver(const Instance& instance, const SolverConfig& config);

struct Metrics {
  long long final_cost = -1;
  double auc = 0.0;
  long long iterations = 0;
  double success_rate = 0.0;  ///< accepted / attempted iterations
};

/// Summary record for the harness. The AUC is integrated up to
/// max(budget_s, last entry time) so overshooting runs stay well-defined.
Metrics snapshot_metrics(const RunTrace& trace, double budget_s);

}  // namespace mapf
