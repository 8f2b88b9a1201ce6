#include "prefagg/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "prefagg/confrontation.hpp"
#include "prefagg/generator.hpp"

namespace prefagg {

namespace {

void require(bool condition, const std::string& fixture_name, const std::string& what) {
  if (!condition) throw Error(ErrorCode::InvalidDocument, "fixture " + fixture_name + " violates: " + what);
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Fixture make_fig1() {
  std::vector<Ballot> judges;
  for (int k = 0; k < 3; ++k) judges.push_back({{0, 1, Outcome::AWins}});
  for (int k = 0; k < 3; ++k) judges.push_back({{0, 2, Outcome::Draw}});
  for (int k = 0; k < 3; ++k) judges.push_back({{1, 3, Outcome::Draw}});
  Fixture f{"fig1", Profile(numbered(4), std::move(judges)),
            "Nine judges on four alternatives: judges 1-3 prefer 1 to 2, judges 4-6 find 1 and 3 "
            "equivalent, judges 7-9 find 2 and 4 equivalent.",
            std::nullopt, std::nullopt};

  const auto c = cumulative_matrix(f.profile);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 1) = 3.0;
  expected(0, 2) = expected(2, 0) = 1.5;
  expected(1, 3) = expected(3, 1) = 1.5;
  require(f.profile.alternative_count() == 4 && f.profile.judge_count() == 9, "fig1", "n = 4, m = 9");
  require(c.wins == expected, "fig1", "cumulative outcomes");
  return f;
}

Fixture make_fig2_scenario() {
  // i: loses to a, beats c and e, plus three wins over weak opponents.
  // j: loses to b, beats d, draws f, plus two losses to weak opponents.
  const std::vector<std::string> labels = {"i", "j", "a", "b", "c", "d", "e", "f", "w1", "w2", "w3", "l1", "l2"};
  auto at = [&](const char* s) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  Ballot ballot = {
      {at("i"), at("a"), Outcome::BWins},  {at("i"), at("c"), Outcome::AWins},  {at("i"), at("e"), Outcome::AWins},
      {at("i"), at("w1"), Outcome::AWins}, {at("i"), at("w2"), Outcome::AWins}, {at("i"), at("w3"), Outcome::AWins},
      {at("j"), at("b"), Outcome::BWins},  {at("j"), at("d"), Outcome::AWins},  {at("j"), at("f"), Outcome::Draw},
      {at("j"), at("l1"), Outcome::BWins}, {at("j"), at("l2"), Outcome::BWins},
  };
  Fixture f{"fig2_scenario", Profile(labels, {ballot}),
            "Game records of i and j in an incomplete tournament, with score preconceptions "
            "a > b, c > d, e > f. i has three extra wins and j two extra losses.",
            std::nullopt, std::pair<std::size_t, std::size_t>{at("i"), at("j")}};

  ScoreVector s;
  s.method = "preconception";
  s.scores = Vector::Zero(static_cast<Eigen::Index>(labels.size()));
  const std::map<std::string, double> preset = {{"a", 6}, {"b", 5}, {"c", 4}, {"d", 3}, {"e", 2}, {"f", 1},
                                                {"w1", 0}, {"w2", 0}, {"w3", 0}, {"l1", 0}, {"l2", 0}};
  for (const auto& [label, value] : preset) s.scores(at(label.c_str())) = value;
  require(s[at("a")] > s[at("b")] && s[at("c")] > s[at("d")] && s[at("e")] > s[at("f")], "fig2_scenario",
          "score preconceptions a > b, c > d, e > f");
  require(outcome_multiset(f.profile, at("i")).elements.size() == 6 &&
              outcome_multiset(f.profile, at("j")).elements.size() == 5,
          "fig2_scenario", "|U_i| = 6, |U_j| = 5");
  f.preset_scores = std::move(s);
  return f;
}

Fixture make_prop2() {
  // 1>3, 2>4, 3>4, and 5 draws with everyone; one judge per comparison.
  std::vector<Ballot> judges = {
      {{0, 2, Outcome::AWins}}, {{1, 3, Outcome::AWins}}, {{2, 3, Outcome::AWins}}, {{4, 0, Outcome::Draw}},
      {{4, 1, Outcome::Draw}},  {{4, 2, Outcome::Draw}},  {{4, 3, Outcome::Draw}},
  };
  Fixture f{"prop2", Profile(numbered(5), std::move(judges)),
            "Reconstruction: arcs 1->3, 2->4, 3->4 and draws of 5 with 1, 2, 3, 4. Rows 2 and 3 of the "
            "cumulative matrix coincide although 3 has an extra loss to 1.",
            std::nullopt, std::nullopt};

  const auto c = cumulative_matrix(f.profile);
  require(is_indivisible(c), "prop2", "indivisible");
  // lambda s_2 = s_4 + s_5 / 2 and lambda s_3 = s_4 + s_5 / 2.
  Vector row = Vector::Zero(5);
  row(3) = 1.0;
  row(4) = 0.5;
  require(c.wins.row(1).transpose() == row && c.wins.row(2).transpose() == row, "prop2",
          "eigen-equations of 2 and 3 coincide");
  require(c.wins(0, 2) == 1.0 && c.wins(2, 0) == 0.0, "prop2", "a_13 = 1, a_31 = 0");
  return f;
}

Profile frozen_prop10_profile();

Fixture make_prop10() {
  Fixture f{"prop10", frozen_prop10_profile(),
            "Frozen output of the seeded least-squares search (seed 7): least squares ranks an "
            "alternative below one whose record it contains plus extra wins. fig1 shows the same "
            "effect on the pair (1, 3).",
            std::nullopt, std::nullopt};
  bool flagged = false;
  const auto scores = least_squares_scores(f.profile);
  for (const auto& v : scm_audit(f.profile, scores)) {
    flagged = flagged || (v.requirement == Requirement::Strict && has_extra_wins_over(f.profile, v.i, v.j));
  }
  require(flagged, "prop10", "least squares is flagged on a pair with an extra-win winner");
  return f;
}

}  // namespace

bool has_extra_wins_over(const Profile& profile, std::size_t i, std::size_t j) {
  std::multiset<std::pair<double, std::size_t>> ui, uj;
  for (const auto& e : outcome_multiset(profile, i).elements) ui.emplace(e.outcome, e.opponent);
  for (const auto& e : outcome_multiset(profile, j).elements) uj.emplace(e.outcome, e.opponent);
  if (ui.size() <= uj.size()) return false;
  for (const auto& e : uj) {
    auto it = ui.find(e);
    if (it == ui.end()) return false;
    ui.erase(it);
  }
  return std::all_of(ui.begin(), ui.end(), [](const auto& e) { return e.first == 1.0; });
}

std::optional<Profile> search_least_squares_extra_win(std::uint64_t seed, std::size_t budget) {
  GeneratorConfig gen;
  gen.n_min = 4;
  gen.n_max = 5;
  gen.m_min = 1;
  gen.m_max = 1;
  gen.pair_prob = 0.6;
  gen.draw_prob = 0.0;
  for (std::size_t t = 0; t < budget; ++t) {
    auto profile = generate_profile(gen, seed, t);
    if (!profile) continue;
    ScoreVector scores;
    try {
      scores = least_squares_scores(*profile);
    } catch (const Error&) {
      continue;
    }
    for (const auto& v : scm_audit(*profile, scores)) {
      if (v.requirement == Requirement::Strict && has_extra_wins_over(*profile, v.i, v.j)) return profile;
    }
  }
  return std::nullopt;
}

namespace {

Profile frozen_prop10_profile() {
  // search_least_squares_extra_win(kProp10Seed, kProp10Budget), frozen.
  // 1 holds 2's record (a win over 3) plus a win over 4, yet ranks below 2.
  return Profile(numbered(4), {{{0, 2, Outcome::AWins},
                                {0, 3, Outcome::AWins},
                                {1, 2, Outcome::AWins},
                                {2, 3, Outcome::AWins}}});
}

}  // namespace

Fixture fixture(std::string_view name) {
  if (name == "fig1") return make_fig1();
  if (name == "fig2_scenario") return make_fig2_scenario();
  if (name == "prop2") return make_prop2();
  if (name == "prop10") return make_prop10();
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"fig1", "fig2_scenario", "prop2", "prop10"};
  return names;
}

}  // namespace prefagg
