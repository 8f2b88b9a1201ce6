#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prefagg/core.hpp"
#include "prefagg/procedures.hpp"

namespace prefagg {

/// Canned profile with the constraints it was built to satisfy. The
/// constraints are re-checked every time a fixture is loaded.
struct Fixture {
  std::string name;
  Profile profile;
  std::string provenance;
  /// Score preconceptions and the confronted pair (fig2_scenario only).
  std::optional<ScoreVector> preset_scores;
  std::optional<std::pair<std::size_t, std::size_t>> focus_pair;
};

/// fig1, fig2_scenario, prop2 or prop10. Throws UnknownFixture; throws
/// InvalidDocument if a fixture fails its own constraint block.
Fixture fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

/// True when U_i contains U_j as a multiset of (outcome, opponent) and every
/// extra element of U_i is a win.
bool has_extra_wins_over(const Profile& profile, std::size_t i, std::size_t j);

/// Seeded search for a profile where least squares is flagged on a pair whose
/// winner holds U_loser plus extra wins. Used to produce the prop10 fixture.
std::optional<Profile> search_least_squares_extra_win(std::uint64_t seed, std::size_t budget);

inline constexpr std::uint64_t kProp10Seed = 7;
inline constexpr std::size_t kProp10Budget = 5000;

}  // namespace prefagg
