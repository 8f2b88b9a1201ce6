#include <doctest.h>

#include <functional>
#include <numeric>

#include "prefagg/fixtures.hpp"
#include "prefagg/generator.hpp"
#include "support.hpp"

using namespace prefagg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Empty;
}

}  // namespace

TEST_CASE("validate_profile accepts the nine-judge example") {
  RawProfile raw;
  raw.alternatives = {"1", "2", "3", "4"};
  for (int k = 0; k < 3; ++k) raw.judges.push_back({{"1", "2", Outcome::AWins}});
  for (int k = 0; k < 3; ++k) raw.judges.push_back({{"1", "3", Outcome::Draw}});
  for (int k = 0; k < 3; ++k) raw.judges.push_back({{"2", "4", Outcome::Draw}});
  const auto p = validate_profile(raw);
  CHECK(p.alternative_count() == 4);
  CHECK(p.judge_count() == 9);
  CHECK(p.comparison_count() == 9);
}

TEST_CASE("validate_profile rejects malformed ballots") {
  RawProfile self;
  self.alternatives = {"1", "2"};
  self.judges = {{{"1", "1", Outcome::Draw}}};
  CHECK(code_of([&] { validate_profile(self); }) == ErrorCode::SelfComparison);

  RawProfile dup;
  dup.alternatives = {"1", "2"};
  dup.judges = {{{"1", "2", Outcome::AWins}, {"2", "1", Outcome::Draw}}};
  CHECK(code_of([&] { validate_profile(dup); }) == ErrorCode::DuplicatePair);

  RawProfile unknown;
  unknown.alternatives = {"1", "2"};
  unknown.judges = {{{"1", "9", Outcome::AWins}}};
  CHECK(code_of([&] { validate_profile(unknown); }) == ErrorCode::UnknownAlternative);

  RawProfile no_judges;
  no_judges.alternatives = {"1"};
  CHECK(code_of([&] { validate_profile(no_judges); }) == ErrorCode::Empty);

  RawProfile no_alternatives;
  no_alternatives.judges = {{}};
  CHECK(code_of([&] { validate_profile(no_alternatives); }) == ErrorCode::Empty);

  RawProfile twice;
  twice.alternatives = {"1", "1"};
  twice.judges = {{}};
  CHECK(code_of([&] { validate_profile(twice); }) == ErrorCode::InvalidDocument);
}

TEST_CASE("cumulative matrix of the nine-judge example") {
  const auto c = cumulative_matrix(fixture("fig1").profile);
  CHECK(c.wins(0, 1) == 3.0);
  CHECK(c.wins(1, 0) == 0.0);
  CHECK(c.wins(0, 2) == 1.5);
  CHECK(c.wins(2, 0) == 1.5);
  CHECK(c.wins(1, 3) == 1.5);
  CHECK(c.wins(3, 1) == 1.5);
  CHECK(c.wins(2, 3) == 0.0);
  CHECK(c.counts(2, 3) == 0.0);
  CHECK(c.counts(0, 1) == 3.0);
  CHECK(c.skew(0, 1) == 3.0);
  CHECK(c.skew(1, 0) == -3.0);
}

TEST_CASE("a single draw splits the point") {
  const auto c = cumulative_matrix(support::single_judge(2, {{0, 1, Outcome::Draw}}));
  CHECK(c.wins(0, 1) == 0.5);
  CHECK(c.wins(1, 0) == 0.5);
  const auto d = degree_summary(c);
  CHECK(d.win_total(0) == 0.5);
  CHECK(d.loss_total(0) == 0.5);
  CHECK(d.comparisons(0) == 1.0);
}

TEST_CASE("degree summary") {
  const auto d = degree_summary(cumulative_matrix(fixture("fig1").profile));
  CHECK(d.win_total(0) == 4.5);
  CHECK(d.loss_total(0) == 1.5);
  CHECK(d.comparisons(0) == 6.0);

  const auto w = degree_summary(cumulative_matrix(support::single_judge(2, {{0, 1, Outcome::AWins}})));
  CHECK(w.win_total(0) == 1.0);
  CHECK(w.win_total(1) == 0.0);
  CHECK(w.loss_total(0) == 0.0);
  CHECK(w.loss_total(1) == 1.0);
}

TEST_CASE("indivisibility") {
  CHECK(is_indivisible(cumulative_matrix(support::three_cycle())));
  CHECK(is_indivisible(cumulative_matrix(fixture("prop2").profile)));
  CHECK(is_indivisible(cumulative_matrix(support::single_judge(1, {}))));

  const auto c = cumulative_matrix(fixture("fig1").profile);
  CHECK_FALSE(is_indivisible(c));
  const auto split = divisible_split(c);
  REQUIRE(split);
  CHECK(verify_split(c, *split));
  CHECK(split->first == std::vector<std::size_t>{0, 2});
  CHECK(split->second == std::vector<std::size_t>{1, 3});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(fixture("fig1").profile));
  CHECK_FALSE(is_connected(support::single_judge(4, {{0, 1, Outcome::AWins}, {2, 3, Outcome::Draw}})));
  CHECK(is_connected(support::single_judge(1, {})));
}

TEST_CASE("outcome multisets") {
  const auto p = fixture("fig1").profile;
  const auto u3 = outcome_multiset(p, 2);
  REQUIRE(u3.elements.size() == 3);
  for (const auto& e : u3.elements) {
    CHECK(e.outcome == 0.5);
    CHECK(e.opponent == 0);
  }
  const auto u1 = outcome_multiset(p, 0);
  REQUIRE(u1.elements.size() == 6);
  int wins_over_2 = 0, draws_with_3 = 0;
  for (const auto& e : u1.elements) {
    wins_over_2 += e.outcome == 1.0 && e.opponent == 1;
    draws_with_3 += e.outcome == 0.5 && e.opponent == 2;
  }
  CHECK(wins_over_2 == 3);
  CHECK(draws_with_3 == 3);
  CHECK(outcome_multiset(support::single_judge(3, {{0, 1, Outcome::AWins}}), 2).elements.empty());
}

TEST_CASE("property: cumulative invariants and permutation equivariance on random profiles") {
  GeneratorConfig gen;
  for (std::uint64_t t = 0; t < 300; ++t) {
    const auto p = *generate_profile(gen, 11, t);
    const auto c = cumulative_matrix(p);
    const auto n = static_cast<Eigen::Index>(c.size());
    CHECK((c.wins + c.wins.transpose() - c.counts).cwiseAbs().maxCoeff() == 0.0);
    CHECK((c.skew + c.skew.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(c.wins.diagonal().cwiseAbs().maxCoeff() == 0.0);
    const auto d = degree_summary(c);
    CHECK(d.win_total.sum() == doctest::Approx(static_cast<double>(p.comparison_count())));
    CHECK(d.loss_total.sum() == doctest::Approx(static_cast<double>(p.comparison_count())));
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(outcome_multiset(p, i).elements.size() == static_cast<std::size_t>(d.comparisons(i)));
    }

    TrialRng rng(12, t);
    std::vector<std::size_t> perm(c.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[rng.between(0, k - 1)]);
    const auto cp = cumulative_matrix(permute_alternatives(p, perm));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) CHECK(cp.wins(perm[i], perm[j]) == c.wins(i, j));

    std::vector<std::size_t> order(p.judge_count());
    std::iota(order.rbegin(), order.rend(), std::size_t{0});
    CHECK(cumulative_matrix(permute_judges(p, order)).wins == c.wins);

    if (const auto split = divisible_split(c)) {
      CHECK_FALSE(is_indivisible(c));
      CHECK(verify_split(c, *split));
    } else {
      CHECK(is_indivisible(c));
    }
  }
}
