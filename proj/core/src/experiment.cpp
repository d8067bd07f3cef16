#include "mapf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace mapf {

Instance load_request_instance(const SolveRequest& request)
{
  GridMap map = load_map(request.map_path);
  std::ifstream in(request.scen_path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + request.scen_path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto entries = parse_scenario_entries(buffer.str());
  if (request.shuffle_agents_seed) {
    Rng rng(*request.shuffle_agents_seed);
    shuffle(entries, rng);
  }
  return make_instance(std::move(map), entries, request.agents);
}

RunResult solve_one(const SolveRequest& request)
{
  const Instance instance = load_request_instance(request);
  return run_solver(instance, request.config);
}

RunRecord summarize(const SolveRequest& request, const RunResult& result)
{
  RunRecord record;
  record.map = request.map_path.filename().string();
  record.scenario = request.scen_path.filename().string();
  record.algorithm = algorithm_name(request.config.algorithm);
  record.agents = request.agents;
  record.neighborhood = request.config.neighborhood_size;
  record.top_k = request.config.top_k;
  record.epsilon = request.config.epsilon;
  record.seed = request.config.seed;
  record.budget_s = request.config.time_budget_s;
  if (result.ok) {
    const Metrics metrics = snapshot_metrics(result.trace, request.config.time_budget_s);
    record.initial_cost = result.initial_cost;
    record.final_cost = metrics.final_cost;
    record.auc = metrics.auc;
    record.iterations = metrics.iterations;
    record.success_rate = metrics.success_rate;
  }
  return record;
}

namespace {

bool glob_match(const std::string& pattern, const std::string& name)
{
  // '*' matches any run of characters; no other wildcards.
  std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == name[n])) {
      ++p, ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace

std::vector<std::filesystem::path> expand_glob(const std::string& pattern)
{
  const std::filesystem::path as_path(pattern);
  if (pattern.find('*') == std::string::npos) return {as_path};

  const std::filesystem::path dir =
      as_path.has_parent_path() ? as_path.parent_path() : std::filesystem::path(".");
  const std::string leaf = as_path.filename().string();
  std::vector<std::filesystem::path> matches;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (glob_match(leaf, entry.path().filename().string()))
        matches.push_back(entry.path());
    }
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

ExperimentSpec parse_experiment_spec(const std::string& json_text)
{
  const nlohmann::json spec_json = nlohmann::json::parse(json_text);
  ExperimentSpec spec;
  spec.maps = spec_json.at("maps").get<std::vector<std::string>>();
  spec.scens = spec_json.at("scens").get<std::vector<std::string>>();
  spec.agents = spec_json.at("agents").get<std::vector<int>>();
  spec.algorithms = spec_json.at("algorithms").get<std::vector<std::string>>();
  spec.budgets_s = spec_json.at("budgets_s").get<std::vector<double>>();
  if (spec_json.contains("k_values"))
    spec.k_values = spec_json.at("k_values").get<std::vector<int>>();
  if (spec_json.contains("seeds"))
    spec.seeds = spec_json.at("seeds").get<std::vector<std::uint64_t>>();
  if (spec_json.contains("repetitions")) spec.repetitions = spec_json.at("repetitions");
  if (spec_json.contains("jobs")) spec.jobs = spec_json.at("jobs");
  if (spec_json.contains("neighborhood_size"))
    spec.neighborhood_size = spec_json.at("neighborhood_size");
  if (spec_json.contains("epsilon")) spec.epsilon = spec_json.at("epsilon");
  if (spec_json.contains("clock")) {
    const std::string clock = spec_json.at("clock");
    if (clock == "wall") spec.clock = ClockMode::wall;
    else if (clock == "virtual") spec.clock = ClockMode::fixed_step;
    else throw ParseError("experiment spec: clock must be 'wall' or 'virtual'");
  }
  if (spec_json.contains("virtual_step_s")) spec.step_s = spec_json.at("virtual_step_s");

  for (const auto& name : spec.algorithms)
    if (!algorithm_from_name(name))
      throw ParseError("experiment spec: unknown algorithm '" + name + "'");
  if (spec.repetitions < 1) throw ParseError("experiment spec: repetitions must be >= 1");
  if (spec.jobs < 1) throw ParseError("experiment spec: jobs must be >= 1");
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_spec(buffer.str());
}

std::vector<AggregateRow> aggregate_records(std::span<const RunRecord> records)
{
  using Key = std::tuple<std::string, std::string, int, int, int, double, double>;
  std::map<Key, std::vector<const RunRecord*>> groups;
  for (const RunRecord& r : records) {
    groups[{r.map, r.algorithm, r.agents, r.neighborhood, r.top_k, r.epsilon, r.budget_s}]
        .push_back(&r);
  }

  const auto mean_ci = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (const double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return std::pair{mean, 0.0};
    double var = 0.0;
    for (const double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size() - 1);
    const double half = 1.96 * std::sqrt(var / static_cast<double>(xs.size()));
    return std::pair{mean, half};
  };

  std::vector<AggregateRow> rows;
  for (const auto& [key, members] : groups) {
    AggregateRow row;
    std::tie(row.map, row.algorithm, row.agents, row.neighborhood, row.top_k, row.epsilon,
             row.budget_s) = key;
    std::vector<double> finals, aucs, iters;
    for (const RunRecord* r : members) {
      ++row.runs;
      if (r->final_cost < 0) {
        ++row.failures;
        continue;
      }
      finals.push_back(static_cast<double>(r->final_cost));
      aucs.push_back(r->auc);
      iters.push_back(static_cast<double>(r->iterations));
    }
    if (!finals.empty()) {
      std::tie(row.mean_final_cost, row.ci95_final_cost) = mean_ci(finals);
      std::tie(row.mean_auc, row.ci95_auc) = mean_ci(aucs);
      row.mean_iterations = mean_ci(iters).first;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_aggregates_csv(std::span<const AggregateRow> rows,
                          const std::filesystem::path& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "map,algorithm,m,N,K,epsilon,budget_s,runs,failures,mean_final_cost,"
         "ci95_final_cost,mean_auc,ci95_auc,mean_iterations\r\n";
  for (const AggregateRow& r : rows) {
    out << r.map << ',' << r.algorithm << ',' << r.agents << ',' << r.neighborhood << ','
        << r.top_k << ',' << format_double(r.epsilon) << ',' << format_double(r.budget_s)
        << ',' << r.runs << ',' << r.failures << ',' << format_double(r.mean_final_cost)
        << ',' << format_double(r.ci95_final_cost) << ',' << format_double(r.mean_auc)
        << ',' << format_double(r.ci95_auc) << ',' << format_double(r.mean_iterations)
        << "\r\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

ExperimentResult run_experiment(const ExperimentSpec& spec, std::ostream* progress)
{
  std::vector<SolveRequest> requests;
  const std::vector<std::uint64_t> seeds = [&] {
    if (!spec.seeds.empty()) return spec.seeds;
    std::vector<std::uint64_t> out(spec.repetitions);
    for (int i = 0; i < spec.repetitions; ++i) out[i] = static_cast<std::uint64_t>(i);
    return out;
  }();

  std::vector<std::filesystem::path> scen_paths;
  for (const std::string& pattern : spec.scens) {
    const auto expanded = expand_glob(pattern);
    scen_paths.insert(scen_paths.end(), expanded.begin(), expanded.end());
  }

  for (const std::string& map_path : spec.maps) {
    const std::string map_stem = std::filesystem::path(map_path).stem().string();
    for (const auto& scen_path : scen_paths) {
      // Scenario files belong to one map. With several maps in the spec,
      // pair each with the scenarios named after its stem.
      if (spec.maps.size() > 1 &&
          scen_path.filename().string().rfind(map_stem, 0) != 0)
        continue;
      for (const int m : spec.agents) {
        for (const std::string& algorithm : spec.algorithms) {
          for (const double budget : spec.budgets_s) {
            for (const int k : spec.k_values) {
              for (const std::uint64_t seed : seeds) {
                SolveRequest request;
                request.map_path = map_path;
                request.scen_path = scen_path;
                request.agents = m;
                request.config.algorithm = *algorithm_from_name(algorithm);
                request.config.neighborhood_size = spec.neighborhood_size;
                request.config.top_k = k;
                request.config.epsilon = spec.epsilon;
                request.config.time_budget_s = budget;
                request.config.seed = seed;
                request.config.clock = spec.clock;
                request.config.step_s = spec.step_s;
                requests.push_back(std::move(request));
              }
            }
          }
        }
      }
    }
  }

  ExperimentResult result;
  result.runs.resize(requests.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= requests.size()) return;
      RunRecord record;
      try {
        const RunResult run = solve_one(requests[i]);
        record = summarize(requests[i], run);
      } catch (const std::exception& e) {
        record = summarize(requests[i], RunResult{});
        if (progress) {
          const std::lock_guard lock(progress_mutex);
          *progress << "run " << i << " failed: " << e.what() << '\n';
        }
      }
      result.runs[i] = std::move(record);
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress) {
        const std::lock_guard lock(progress_mutex);
        *progress << "[" << finished << "/" << requests.size() << "] "
                  << result.runs[i].algorithm << " " << result.runs[i].scenario
                  << " m=" << result.runs[i].agents
                  << " cost=" << result.runs[i].final_cost << '\n';
      }
    }
  };

  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  result.aggregates = aggregate_records(result.runs);
  return result;
}

}  // namespace mapf
