#include "mapf/lns.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mapf/conflicts.hpp"

namespace mapf {

std::string algorithm_name(Algorithm algorithm)
{
  switch (algorithm) {
    case Algorithm::address_ts: return "address_ts";
    case Algorithm::address_eg: return "address_eg";
    case Algorithm::lns_adaptive: return "lns_adaptive";
    case Algorithm::lns_agent_only: return "lns_agent_only";
    case Algorithm::lns_adaptive_plus_address: return "lns_adaptive_plus_address";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name)
{
  for (const Algorithm a : {Algorithm::address_ts, Algorithm::address_eg,
                            Algorithm::lns_adaptive, Algorithm::lns_agent_only,
                            Algorithm::lns_adaptive_plus_address}) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

std::vector<std::string> algorithm_names()
{
  return {"address_ts", "address_eg", "lns_adaptive", "lns_agent_only",
          "lns_adaptive_plus_address"};
}

std::vector<std::string> arm_names(Algorithm algorithm)
{
  std::vector<std::string> names{"agent_based", "map_based", "random"};
  if (algorithm == Algorithm::lns_adaptive_plus_address) names.push_back("address");
  return names;
}

namespace {

constexpr int kArmAgentBased = 0;
constexpr int kArmMapBased = 1;
constexpr int kArmRandom = 2;
constexpr int kArmAddress = 3;

class SolverClock {
 public:
  SolverClock(ClockMode mode, double step_s)
      : mode_(mode), step_s_(step_s), start_(std::chrono::steady_clock::now())
  {
  }

  double elapsed() const
  {
    if (mode_ == ClockMode::fixed_step) return static_cast<double>(ticks_) * step_s_;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void tick() { ++ticks_; }

 private:
  ClockMode mode_;
  double step_s_;
  std::chrono::steady_clock::time_point start_;
  long long ticks_ = 0;
};

struct LoopState {
  Instance const* instance;
  SolverConfig config;
  DistTableCache dists;
  Rng rng;
  Plan plan;
  ReservationTable table;
  SearchScratch scratch;
  int effective_n;

  LoopState(const Instance& inst, const SolverConfig& cfg)
      : instance(&inst),
        config(cfg),
        dists(inst.map()),
        rng(cfg.seed),
        table(inst.map().size()),
        effective_n(std::min(cfg.neighborhood_size, inst.num_agents()))
  {
  }
};

// Destroys the neighborhood paths, replans them, and applies the strict
// acceptance test. Returns true when the new paths were accepted. The
// reservation table and plan always reflect the accepted state afterwards.
bool destroy_and_repair(LoopState& s, const Neighborhood& neighborhood,
                        long long* improvement_out)
{
  const auto& members = neighborhood.agents;
  std::vector<Path> old_paths;
  std::vector<int> old_steps;
  long long old_cost = 0;
  old_paths.reserve(members.size());
  old_steps.reserve(members.size());
  for (const int a : members) {
    old_paths.push_back(s.plan.path(a));
    old_steps.push_back(s.plan.path(a).steps());
    old_cost += s.plan.delay(a);
    s.table.remove_path(s.plan.path(a));
  }

  auto replanned =
      repair_on_table(*s.instance, s.dists, members, old_steps, s.table, s.rng, &s.scratch);
  if (!replanned) {
    for (const Path& p : old_paths) s.table.insert_path(p);
    if (improvement_out) *improvement_out = 0;
    return false;
  }

  long long new_cost = 0;
  for (const Path& p : *replanned)
    new_cost += compute_delay(p, s.dists.get(s.instance->agent(p.agent).goal));

  if (old_cost - new_cost > 0) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      Path& p = (*replanned)[i];
      const int delay = compute_delay(p, s.dists.get(s.instance->agent(p.agent).goal));
      s.plan.replace_path(members[i], std::move(p), delay);
    }
    if (improvement_out) *improvement_out = old_cost - new_cost;
    if (s.config.validate_accepted) {
      if (!validate_plan(*s.instance, s.plan).empty())
        throw std::logic_error("accepted plan has conflicts");
      if (s.plan.recompute_total_delay(s.dists) != s.plan.total_delay())
        throw std::logic_error("cached plan cost diverged from recomputation");
    }
    return true;
  }

  for (const Path& p : *replanned) s.table.remove_path(p);
  for (std::size_t i = 0; i < members.size(); ++i)
    s.table.insert_path(old_paths[i]);
  if (improvement_out) *improvement_out = 0;
  return false;
}

// Shared anytime loop. `pick` produces the neighborhood for one iteration;
// `settle` is told whether it was accepted and by how much.
template <typename Pick, typename Settle>
void anytime_loop(LoopState& s, SolverClock& clock, RunResult& result, Pick&& pick,
                  Settle&& settle)
{
  while (clock.elapsed() < s.config.time_budget_s) {
    ++result.iterations;
    const Neighborhood neighborhood = pick();
    long long improvement = 0;
    const bool accepted = destroy_and_repair(s, neighborhood, &improvement);
    clock.tick();
    if (accepted) {
      ++result.accepted;
      result.trace.add(clock.elapsed(), s.plan.total_delay());
    }
    settle(neighborhood, accepted, improvement, clock.elapsed());
  }
}

bool start_run(LoopState& s, SolverClock& clock, RunResult& result)
{
  auto initial = initial_solution(*s.instance, s.dists, s.rng,
                                  PlannerConfig{s.config.max_restarts});
  clock.tick();  // the initial solution consumes the first virtual step
  if (!initial) {
    result.ok = false;
    result.error = "no initial solution after " + std::to_string(s.config.max_restarts) +
                   " restarts";
    return false;
  }
  s.plan = std::move(*initial);
  for (const Path& p : s.plan.paths()) s.table.insert_path(p);
  result.initial_cost = s.plan.total_delay();
  result.trace.add(clock.elapsed(), s.plan.total_delay());
  return true;
}

void finish_run(LoopState& s, SolverClock& clock, RunResult& result)
{
  const double end = clock.elapsed();
  if (end > result.trace.entries.back().time_s)
    result.trace.add(end, s.plan.total_delay());
  result.trace.iterations = result.iterations;
  result.trace.accepted = result.accepted;
  result.plan = std::move(s.plan);
  result.final_cost = result.plan.total_delay();
  result.elapsed_s = end;
  result.ok = true;
}

Neighborhood all_agents_neighborhood(int m, std::optional<int> seed)
{
  Neighborhood nb;
  nb.agents.resize(m);
  for (int i = 0; i < m; ++i) nb.agents[i] = i;
  nb.seed = seed;
  return nb;
}

}  // namespace

RunResult run_address(const Instance& instance, const SolverConfig& config)
{
  RunResult result;
  result.posteriors = BetaParams(instance.num_agents());
  LoopState s(instance, config);
  SolverClock clock(config.clock, config.step_s);
  if (!start_run(s, clock, result)) return result;

  const BanditKind kind = config.algorithm == Algorithm::address_eg ? BanditKind::eps_greedy
                                                                    : BanditKind::thompson;
  anytime_loop(
      s, clock, result,
      [&] {
        return address_destroy(instance, s.dists, s.plan, s.table, config.top_k,
                               result.posteriors, kind, config.epsilon, s.effective_n, s.rng);
      },
      [&](const Neighborhood& nb, bool accepted, long long, double) {
        result.posteriors.update(*nb.seed, accepted);
      });

  finish_run(s, clock, result);
  return result;
}

RunResult run_lns_baseline(const Instance& instance, const SolverConfig& config)
{
  RunResult result;
  LoopState s(instance, config);
  SolverClock clock(config.clock, config.step_s);

  const bool with_address = config.algorithm == Algorithm::lns_adaptive_plus_address;
  const bool adaptive = config.algorithm != Algorithm::lns_agent_only;
  const int arms = with_address ? 4 : 3;
  result.weights = SelectionWeights(arms, config.weight_gamma, config.weight_floor);
  if (with_address) result.posteriors = BetaParams(instance.num_agents());

  if (!start_run(s, clock, result)) return result;

  TabuList tabu;
  int current_arm = kArmAgentBased;
  // Junction availability is a property of the map, so the fallback from
  // the map-based heuristic to random selection is decided once.
  const auto pick = [&]() -> Neighborhood {
    current_arm = adaptive ? result.weights.select(s.rng) : kArmAgentBased;
    switch (current_arm) {
      case kArmAgentBased:
        return agent_based_destroy(instance, s.dists, s.plan, s.table, tabu, s.effective_n,
                                   s.rng);
      case kArmMapBased:
        if (auto nb = map_based_destroy(instance, s.plan, s.effective_n, s.rng)) return *nb;
        [[fallthrough]];
      case kArmRandom:
        if (s.effective_n >= instance.num_agents())
          return all_agents_neighborhood(instance.num_agents(), std::nullopt);
        return random_destroy(instance, s.effective_n, s.rng);
      default:
        return address_destroy(instance, s.dists, s.plan, s.table, config.top_k,
                               result.posteriors, BanditKind::thompson, config.epsilon,
                               s.effective_n, s.rng);
    }
  };
  const auto settle = [&](const Neighborhood& nb, bool accepted, long long improvement,
                          double now) {
    if (current_arm == kArmAddress) result.posteriors.update(*nb.seed, accepted);
    if (adaptive) {
      result.weights.update(current_arm, static_cast<double>(improvement));
      if (config.log_weights && accepted)
        result.weight_log.push_back({now, result.weights.weights()});
    }
  };

  anytime_loop(s, clock, result, pick, settle);

  if (adaptive && config.log_weights)
    result.weight_log.push_back({clock.elapsed(), result.weights.weights()});
  finish_run(s, clock, result);
  return result;
}

RunResult run_solver(const Instance& instance, const SolverConfig& config)
{
  switch (config.algorithm) {
    case Algorithm::address_ts:
    case Algorithm::address_eg:
      return run_address(instance, config);
    default:
      return run_lns_baseline(instance, config);
  }
}

Metrics snapshot_metrics(const RunTrace& trace, double budget_s)
{
  Metrics metrics;
  metrics.final_cost = trace.entries.back().cost;
  metrics.auc = auc(trace, std::max(budget_s, trace.entries.back().time_s));
  metrics.iterations = trace.iterations;
  metrics.success_rate =
      trace.iterations > 0 ? static_cast<double>(trace.accepted) / trace.iterations : 0.0;
  return metrics;
}

}  // namespace mapf
