#pragma once

#include <cstdint>
#include <optional>

#include "prefagg/core.hpp"

namespace prefagg {

/// Counter-based random stream: the state for (seed, trial) is derived by
/// hashing both, so any trial can be regenerated on its own.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform integer in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  bool chance(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  std::size_t n_min = 3;
  std::size_t n_max = 6;
  std::size_t m_min = 1;
  std::size_t m_max = 3;
  double pair_prob = 0.7;
  double draw_prob = 0.25;
  bool indivisible_only = false;
  std::size_t max_rejections = 1000;
};

/// Draws n and m, then lets every judge answer each pair with probability
/// pair_prob (draw with draw_prob, otherwise a fair coin for the winner).
/// Returns nullopt if indivisible_only and every attempt was divisible.
std::optional<Profile> generate_profile(const GeneratorConfig& config, std::uint64_t seed, std::uint64_t trial);

}  // namespace prefagg
