#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mapf {

/// Per-run random source. All randomized operations take an explicit `Rng&`
/// so that a run is fully determined by its seed. The helpers below derive
/// uniform/normal variates from raw 64-bit draws instead of going through
/// std distributions, whose output is implementation-defined; this keeps
/// traces reproducible across standard libraries.
using Rng = std::mt19937_64;

/// Uniform double in the open interval (0, 1).
inline double uniform_unit(Rng& rng)
{
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform integer in [0, n). n must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t n)
{
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

/// Standard normal variate (Box-Muller, cosine branch only).
inline double normal_unit(Rng& rng)
{
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

/// Fisher-Yates shuffle driven by uniform_index.
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng)
{
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = uniform_index(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

/// First k elements of a uniform random permutation of `values`.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> values, std::size_t k, Rng& rng)
{
  if (k > values.size()) k = values.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_index(rng, values.size() - i);
    std::swap(values[i], values[j]);
  }
  values.resize(k);
  return values;
}

}  // namespace mapf
