#include "prefagg/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

namespace prefagg {

namespace {

struct TrialOutcome {
  bool skipped = false;
  std::optional<CounterexampleReport> report;
};

TrialOutcome run_trial(const MethodSpec& method, const GeneratorConfig& gen, std::uint64_t seed,
                       std::uint64_t trial) {
  auto profile = generate_profile(gen, seed, trial);
  if (!profile) return {true, std::nullopt};
  ScoreVector scores;
  try {
    scores = rate(*profile, method);
  } catch (const Error&) {
    return {true, std::nullopt};
  }
  auto violations = scm_audit(*profile, scores);
  if (violations.empty()) return {};
  return {false, CounterexampleReport{*profile, method, scores, violations.front(), seed, trial}};
}

}  // namespace

SearchResult scm_violation_search(const MethodSpec& method, const GeneratorConfig& gen, std::uint64_t seed,
                                  std::size_t budget, std::size_t workers) {
  SearchResult result;
  if (budget == 0) return result;
  workers = std::clamp<std::size_t>(workers, 1, budget);

  std::vector<std::uint8_t> skipped(budget, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{budget};
  std::mutex guard;
  std::optional<CounterexampleReport> found;

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= budget || t > best.load()) return;
      auto outcome = run_trial(method, gen, seed, t);
      skipped[t] = outcome.skipped ? 1 : 0;
      if (outcome.report) {
        std::lock_guard lock(guard);
        if (t < best.load()) {
          best.store(t);
          found = std::move(outcome.report);
        }
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  const std::size_t consumed = found ? best.load() + 1 : budget;
  result.trials = consumed;
  result.skipped = static_cast<std::size_t>(std::count(skipped.begin(), skipped.begin() + consumed, 1));
  result.report = std::move(found);
  return result;
}

bool reverify(const CounterexampleReport& report) {
  try {
    auto scores = rate(report.profile, report.method);
    auto verdict = scm_confront(report.profile, scores, report.verdict.i, report.verdict.j);
    return !verdict.satisfied && verdict.requirement == report.verdict.requirement;
  } catch (const Error&) {
    return false;
  }
}

bool is_macrovertex(const Matrix& counts, std::span<const std::size_t> members, MacrovertexReading reading) {
  const auto n = static_cast<std::size_t>(counts.rows());
  std::vector<bool> inside(n, false);
  for (auto i : members) inside.at(i) = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (inside[k]) continue;
    for (auto i : members) {
      for (auto j : members) {
        if (reading == MacrovertexReading::SharedOutsideCounts) {
          if (counts(i, k) != counts(j, k)) return false;
        } else if (i != j && counts(i, j) != counts(j, k)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> enumerate_macrovertices(const Profile& profile, MacrovertexReading reading) {
  const std::size_t n = profile.alternative_count();
  if (n > kMaxExhaustiveAlternatives) {
    throw Error(ErrorCode::TooLarge, "macrovertex enumeration is limited to 20 alternatives");
  }
  const auto counts = cumulative_matrix(profile).counts;
  std::vector<std::vector<std::size_t>> out;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) members.push_back(i);
    if (is_macrovertex(counts, members, reading)) out.push_back(std::move(members));
  }
  return out;
}

namespace {

using ComparisonKey = std::tuple<std::size_t, std::size_t, int>;

/// Per judge: comparisons touching the outside (with outcome) and the pairs compared inside.
struct Footprint {
  std::vector<std::multiset<ComparisonKey>> outside;
  std::vector<std::multiset<std::pair<std::size_t, std::size_t>>> inside_pairs;

  bool operator==(const Footprint&) const = default;
};

Footprint footprint(const Profile& p, const std::vector<bool>& inside) {
  Footprint f;
  for (const auto& ballot : p.judges()) {
    std::multiset<ComparisonKey> outside;
    std::multiset<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& cmp : ballot) {
      // Orient so that the smaller index comes first.
      const bool swap = cmp.a > cmp.b;
      const std::size_t lo = swap ? cmp.b : cmp.a;
      const std::size_t hi = swap ? cmp.a : cmp.b;
      if (inside[cmp.a] && inside[cmp.b]) {
        pairs.emplace(lo, hi);
      } else {
        const double v = swap ? cmp.value_for_b() : cmp.value_for_a();
        outside.emplace(lo, hi, static_cast<int>(std::lround(2.0 * v)));
      }
    }
    f.outside.push_back(std::move(outside));
    f.inside_pairs.push_back(std::move(pairs));
  }
  return f;
}

}  // namespace

IndependenceVerdict macrovertex_independence_check(const MethodSpec& method, const Profile& base,
                                                   std::span<const std::size_t> members,
                                                   std::span<const Profile> perturbed) {
  const std::size_t n = base.alternative_count();
  std::vector<bool> inside(n, false);
  for (auto i : members) {
    if (i >= n) throw Error(ErrorCode::UnknownAlternative, "macrovertex member out of range");
    inside[i] = true;
  }
  if (!is_macrovertex(cumulative_matrix(base).counts, members)) {
    throw Error(ErrorCode::NotAMacrovertex, "the given subset is not a macrovertex of the base profile");
  }
  const auto base_print = footprint(base, inside);
  const auto base_scores = rate(base, method);

  IndependenceVerdict verdict;
  for (const auto& p : perturbed) {
    if (p.alternatives() != base.alternatives() || p.judge_count() != base.judge_count()) {
      throw Error(ErrorCode::InvalidPerturbation, "perturbation changes the alternatives or judges");
    }
    if (!is_macrovertex(cumulative_matrix(p).counts, members)) {
      throw Error(ErrorCode::NotAMacrovertex, "perturbation breaks the macrovertex");
    }
    if (!(footprint(p, inside) == base_print)) {
      throw Error(ErrorCode::InvalidPerturbation, "perturbation touches comparisons outside the macrovertex");
    }
    ScoreVector scores;
    try {
      scores = rate(p, method);
    } catch (const Error&) {
      ++verdict.skipped;
      continue;
    }
    ++verdict.perturbations_run;
    for (std::size_t k = 0; k < n; ++k) {
      if (inside[k]) continue;
      const double change = std::abs(scores[k] - base_scores[k]);
      if (change > verdict.max_change) verdict.max_change = change;
      if (change > kIndependenceTol && verdict.independent) {
        verdict.independent = false;
        verdict.witness = p;
        verdict.witness_alternative = k;
      }
    }
  }
  return verdict;
}

IndependenceVerdict macrovertex_independence_test(const MethodSpec& method, const Profile& profile,
                                                  std::span<const std::size_t> members, std::size_t perturbations,
                                                  std::uint64_t seed) {
  std::vector<bool> inside(profile.alternative_count(), false);
  for (auto i : members) inside.at(i) = true;

  std::vector<Profile> perturbed;
  perturbed.reserve(perturbations);
  for (std::size_t t = 0; t < perturbations; ++t) {
    TrialRng rng(seed, t);
    std::vector<Ballot> judges = profile.judges();
    for (auto& ballot : judges) {
      for (auto& cmp : ballot) {
        if (!inside[cmp.a] || !inside[cmp.b]) continue;
        constexpr Outcome kOutcomes[] = {Outcome::AWins, Outcome::BWins, Outcome::Draw};
        cmp.outcome = kOutcomes[rng.between(0, 2)];
      }
    }
    perturbed.emplace_back(profile.alternatives(), std::move(judges));
  }
  return macrovertex_independence_check(method, profile, members, perturbed);
}

SplittingVerdict splitting_balance_check(const Profile& profile, const ScoreVector& s) {
  const std::size_t n = profile.alternative_count();
  if (n > kMaxExhaustiveAlternatives) {
    throw Error(ErrorCode::TooLarge, "splitting balance is limited to 20 alternatives");
  }
  const auto c = cumulative_matrix(profile);
  SplittingVerdict verdict;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Split split;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? split.first : split.second).push_back(i);
    if (!verify_split(c, split)) continue;
    ++verdict.splits_checked;
    double top_first = -std::numeric_limits<double>::infinity();
    double bottom_second = std::numeric_limits<double>::infinity();
    for (auto i : split.first) top_first = std::max(top_first, s[i]);
    for (auto j : split.second) bottom_second = std::min(bottom_second, s[j]);
    if (top_first < bottom_second - kScoreTieTol && verdict.pass) {
      verdict.pass = false;
      verdict.witness = std::move(split);
    }
  }
  return verdict;
}

}  // namespace prefagg
