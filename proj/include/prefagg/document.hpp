#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "prefagg/core.hpp"

namespace prefagg {

/// {"alternatives": [...], "judges": [{"comparisons": [{"a", "b", "outcome"}]}]}
/// with outcome one of "a_wins", "b_wins", "draw".
nlohmann::json profile_to_json(const Profile& profile);
Profile profile_from_json(const nlohmann::json& doc);

/// One comparison per row: judge,a,b,outcome. A header row is optional.
/// Alternatives and judges are numbered in order of first appearance.
RawProfile raw_profile_from_csv(std::istream& in);
Profile profile_from_csv(std::istream& in);

/// Reads JSON, or CSV when the path ends in ".csv".
Profile load_profile(const std::string& path);

std::string_view outcome_name(Outcome o) noexcept;
Outcome parse_outcome(std::string_view name);

}  // namespace prefagg
