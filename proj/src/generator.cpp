#include "prefagg/generator.hpp"

#include <string>

namespace prefagg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(splitmix64(splitmix64(seed) ^ (trial * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL))) {}

std::uint64_t TrialRng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double TrialRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t TrialRng::between(std::size_t lo, std::size_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(next() % span);
}

std::optional<Profile> generate_profile(const GeneratorConfig& config, std::uint64_t seed, std::uint64_t trial) {
  if (config.n_min == 0 || config.m_min == 0 || config.n_max < config.n_min || config.m_max < config.m_min) {
    throw Error(ErrorCode::InvalidDocument, "generator ranges must be nonempty and start at 1 or more");
  }
  TrialRng rng(seed, trial);
  const std::size_t attempts = config.indivisible_only ? config.max_rejections + 1 : 1;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const std::size_t n = rng.between(config.n_min, config.n_max);
    const std::size_t m = rng.between(config.m_min, config.m_max);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    std::vector<Ballot> judges(m);
    for (auto& ballot : judges) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (!rng.chance(config.pair_prob)) continue;
          Outcome o = rng.chance(config.draw_prob) ? Outcome::Draw
                      : rng.chance(0.5)            ? Outcome::AWins
                                                   : Outcome::BWins;
          ballot.push_back({a, b, o});
        }
      }
    }
    Profile profile(std::move(labels), std::move(judges));
    if (!config.indivisible_only || is_indivisible(cumulative_matrix(profile))) return profile;
  }
  return std::nullopt;
}

}  // namespace prefagg
