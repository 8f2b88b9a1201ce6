#include "prefagg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "prefagg/document.hpp"

namespace prefagg {

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

namespace {

std::vector<std::vector<std::size_t>> groups_by_score(const ScoreVector& s, double tol) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
  std::vector<std::vector<std::size_t>> groups;
  for (auto i : order) {
    if (groups.empty() || s[groups.back().back()] - s[i] > tol) groups.emplace_back();
    groups.back().push_back(i);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

}  // namespace

std::vector<std::size_t> ranking_order(const ScoreVector& s) {
  std::vector<std::size_t> order;
  for (const auto& g : groups_by_score(s, kScoreTieTol)) order.insert(order.end(), g.begin(), g.end());
  return order;
}

std::vector<std::vector<std::size_t>> tie_groups(const ScoreVector& s, double tol) { return groups_by_score(s, tol); }

namespace {

nlohmann::json params_json(const ScoreVector& s) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : s.params) {
    if (const auto* d = std::get_if<double>(&value)) {
      out[key] = round15(*d);
    } else {
      out[key] = std::get<std::string>(value);
    }
  }
  return out;
}

nlohmann::json labels(const Profile& p, const std::vector<std::size_t>& idx) {
  nlohmann::json out = nlohmann::json::array();
  for (auto i : idx) out.push_back(p.label(i));
  return out;
}

nlohmann::json multiset_json(const Profile& p, const OutcomeMultiset& u) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : u.elements) {
    out.push_back({{"outcome", e.outcome}, {"opponent", p.label(e.opponent)}, {"judge", e.judge + 1}});
  }
  return out;
}

}  // namespace

nlohmann::json score_report(const Profile& profile, const ScoreVector& s) {
  nlohmann::json scores = nlohmann::json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    scores.push_back({{"alternative", profile.label(i)}, {"score", round15(s[i])}});
  }
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : tie_groups(s)) groups.push_back(labels(profile, g));

  nlohmann::json diagnostics = {{"iterations", s.diag.iterations}, {"residual", round15(s.diag.residual)}};
  if (s.lambda) diagnostics["lambda"] = round15(*s.lambda);

  return {{"method", s.method},
          {"params", params_json(s)},
          {"normalization", to_string(s.normalization)},
          {"scores", std::move(scores)},
          {"ranking", labels(profile, ranking_order(s))},
          {"tie_groups", std::move(groups)},
          {"diagnostics", std::move(diagnostics)}};
}

nlohmann::json verdict_json(const Profile& profile, const ConfrontationVerdict& v) {
  nlohmann::json out = {{"i", profile.label(v.i)},
                        {"j", profile.label(v.j)},
                        {"requirement", to_string(v.requirement)},
                        {"satisfied", v.satisfied},
                        {"u_i", multiset_json(profile, v.u_i)},
                        {"u_j", multiset_json(profile, v.u_j)}};
  if (v.witness) {
    // Witness indices refer to positions in u_i / u_j.
    nlohmann::json matching = nlohmann::json::array();
    for (const auto& [a, b] : v.witness->matching) matching.push_back({a, b});
    out["witness"] = {{"i_extra", v.witness->i_extra}, {"j_extra", v.witness->j_extra}, {"matching", matching}};
  }
  return out;
}

nlohmann::json counterexample_json(const CounterexampleReport& r) {
  return {{"method", method_name(r.method)},
          {"seed", r.seed},
          {"trial", r.trial},
          {"profile", profile_to_json(r.profile)},
          {"scores", score_report(r.profile, r.scores)},
          {"violation", verdict_json(r.profile, r.verdict)}};
}

nlohmann::json splitting_json(const Profile& profile, const SplittingVerdict& v) {
  nlohmann::json out = {{"result", v.pass ? "PASS" : "FAIL"}, {"splits_checked", v.splits_checked}};
  if (v.witness) out["witness"] = {{"J1", labels(profile, v.witness->first)}, {"J2", labels(profile, v.witness->second)}};
  return out;
}

nlohmann::json independence_json(const Profile& profile, const std::vector<std::size_t>& members,
                                 const IndependenceVerdict& v) {
  nlohmann::json out = {{"members", labels(profile, members)},
                        {"independent", v.independent},
                        {"perturbations_run", v.perturbations_run},
                        {"skipped", v.skipped},
                        {"max_change", round15(v.max_change)}};
  if (v.witness) out["witness_profile"] = profile_to_json(*v.witness);
  if (v.witness_alternative) out["witness_alternative"] = profile.label(*v.witness_alternative);
  return out;
}

}  // namespace prefagg
