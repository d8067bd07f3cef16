#include "mapf/bandit.hpp"

#include <cmath>
#include <stdexcept>

namespace mapf {

long long BetaParams::total_successes() const
{
  long long n = 0;
  for (const int a : alpha_) n += a - 1;
  return n;
}

long long BetaParams::total_failures() const
{
  long long n = 0;
  for (const int b : beta_) n += b - 1;
  return n;
}

namespace {

// Marsaglia-Tsang squeeze method, valid for shape >= 1.
double sample_gamma(double shape, Rng& rng)
{
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal_unit(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_unit(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_beta(double alpha, double beta, Rng& rng)
{
  if (!(alpha >= 1.0) || !(beta >= 1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("sample_beta: parameters must be finite and >= 1");
  const double x = sample_gamma(alpha, rng);
  const double y = sample_gamma(beta, rng);
  return x / (x + y);
}

int select_thompson(const BetaParams& params, std::span<const int> candidates, Rng& rng)
{
  if (candidates.empty())
    throw std::invalid_argument("select_thompson: empty candidate list");
  int best = candidates[0];
  double best_q = -1.0;
  for (const int arm : candidates) {
    const double q = sample_beta(params.alpha(arm), params.beta(arm), rng);
    if (q > best_q) {
      best_q = q;
      best = arm;
    }
  }
  return best;
}

int select_eps_greedy(const BetaParams& params, std::span<const int> candidates,
                      double epsilon, Rng& rng)
{
  if (candidates.empty())
    throw std::invalid_argument("select_eps_greedy: empty candidate list");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("select_eps_greedy: epsilon must lie in [0, 1]");
  if (uniform_unit(rng) < epsilon)
    return candidates[uniform_index(rng, candidates.size())];
  int best = candidates[0];
  double best_mean = -1.0;
  for (const int arm : candidates) {
    const double mean = params.mean(arm);
    if (mean > best_mean) {
      best_mean = mean;
      best = arm;
    }
  }
  return best;
}

SelectionWeights::SelectionWeights(int arms, double gamma, double floor)
    : weights_(arms, 1.0), gamma_(gamma), floor_(floor)
{
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("SelectionWeights: gamma must lie in (0, 1)");
}

int SelectionWeights::select(Rng& rng) const
{
  double sum = 0.0;
  for (const double w : weights_) sum += w;
  const double r = uniform_unit(rng) * sum;
  double acc = 0.0;
  for (int i = 0; i < size(); ++i) {
    acc += weights_[i];
    if (r < acc) return i;
  }
  return size() - 1;
}

void SelectionWeights::update(int arm, double improvement)
{
  const double reward = improvement > 0.0 ? improvement : 0.0;
  weights_[arm] = gamma_ * reward + (1.0 - gamma_) * weights_[arm];
  if (weights_[arm] < floor_) weights_[arm] = floor_;
}

std::vector<double> SelectionWeights::shares() const
{
  double sum = 0.0;
  for (const double w : weights_) sum += w;
  std::vector<double> shares(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) shares[i] = weights_[i] / sum;
  return shares;
}

}  // namespace mapf
