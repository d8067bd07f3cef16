#pragma once

#include <span>
#include <vector>

#include "mapf/rng.hpp"

namespace mapf {

/// Per-arm success/failure counters backing Beta posteriors. Arm i carries
/// Beta(alpha_i, beta_i) with both parameters starting at 1 (uniform prior);
/// alpha_i - 1 equals the number of success updates, beta_i - 1 the failures.
class BetaParams {
 public:
  BetaParams() = default;
  explicit BetaParams(int arms) : alpha_(arms, 1), beta_(arms, 1) {}

  int size() const { return static_cast<int>(alpha_.size()); }
  int alpha(int arm) const { return alpha_[arm]; }
  int beta(int arm) const { return beta_[arm]; }
  double mean(int arm) const
  {
    return static_cast<double>(alpha_[arm]) / (alpha_[arm] + beta_[arm]);
  }

  void update(int arm, bool success) { success ? ++alpha_[arm] : ++beta_[arm]; }

  long long total_successes() const;  ///< sum of (alpha - 1)
  long long total_failures() const;   ///< sum of (beta - 1)

 private:
  std::vector<int> alpha_;
  std::vector<int> beta_;
};

/// One draw from Beta(alpha, beta) via two Marsaglia-Tsang gamma draws.
/// Parameters must be finite and >= 1 (throws std::invalid_argument).
double sample_beta(double alpha, double beta, Rng& rng);

/// Thompson Sampling restricted to `candidates`: draws one Beta sample per
/// candidate in list order and returns the arm with the highest draw, ties
/// to the lowest position. Candidates must be non-empty.
int select_thompson(const BetaParams& params, std::span<const int> candidates, Rng& rng);

/// With probability epsilon a uniform random candidate, otherwise the
/// candidate with the highest posterior mean (ties to the lowest position).
int select_eps_greedy(const BetaParams& params, std::span<const int> candidates,
                      double epsilon, Rng& rng);

/// Roulette-wheel weights for destroy-heuristic selection. Selection
/// probability is proportional to weight; an update blends the observed
/// improvement into the chosen arm's weight and a floor keeps every arm
/// selectable.
class SelectionWeights {
 public:
  static constexpr double kDefaultGamma = 0.1;
  static constexpr double kDefaultFloor = 1e-2;

  SelectionWeights() = default;
  explicit SelectionWeights(int arms, double gamma = kDefaultGamma,
                            double floor = kDefaultFloor);

  int size() const { return static_cast<int>(weights_.size()); }
  int select(Rng& rng) const;

  /// weights[arm] <- gamma * max(improvement, 0) + (1 - gamma) * weights[arm],
  /// clamped below by the floor.
  void update(int arm, double improvement);

  const std::vector<double>& weights() const { return weights_; }
  std::vector<double> shares() const;

 private:
  std::vector<double> weights_;
  double gamma_ = kDefaultGamma;
  double floor_ = kDefaultFloor;
};

}  // namespace mapf
