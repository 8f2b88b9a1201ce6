#pragma once

#include <string>
#include <vector>

#include "prefagg/core.hpp"

namespace support {

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Profile on labels "1".."n"; comparisons use 0-based indices.
inline prefagg::Profile profile(std::size_t n, std::vector<prefagg::Ballot> judges) {
  return prefagg::Profile(labels(n), std::move(judges));
}

inline prefagg::Profile single_judge(std::size_t n, prefagg::Ballot ballot) { return profile(n, {std::move(ballot)}); }

/// 1 beats 2 twice, 2 beats 1 once.
inline prefagg::Profile two_to_one() {
  using prefagg::Outcome;
  return profile(2, {{{0, 1, Outcome::AWins}}, {{0, 1, Outcome::AWins}}, {{0, 1, Outcome::BWins}}});
}

inline prefagg::Profile three_cycle() {
  using prefagg::Outcome;
  return single_judge(3, {{0, 1, Outcome::AWins}, {1, 2, Outcome::AWins}, {2, 0, Outcome::AWins}});
}

}  // namespace support
