#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prefagg/axioms.hpp"
#include "prefagg/confrontation.hpp"
#include "prefagg/procedures.hpp"

namespace prefagg {

/// Rounds to 15 significant digits, the precision every report carries.
double round15(double x);

/// Labels by descending score; scores within kScoreTieTol count as tied
/// and keep input order.
std::vector<std::size_t> ranking_order(const ScoreVector& s);

/// Runs of the ranking whose neighbouring scores are within tol.
std::vector<std::vector<std::size_t>> tie_groups(const ScoreVector& s, double tol = kScoreTieTol);

nlohmann::json score_report(const Profile& profile, const ScoreVector& s);
nlohmann::json verdict_json(const Profile& profile, const ConfrontationVerdict& v);
nlohmann::json counterexample_json(const CounterexampleReport& r);
nlohmann::json splitting_json(const Profile& profile, const SplittingVerdict& v);
nlohmann::json independence_json(const Profile& profile, const std::vector<std::size_t>& members,
                                 const IndependenceVerdict& v);

}  // namespace prefagg
