#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prefagg/confrontation.hpp"
#include "prefagg/generator.hpp"
#include "prefagg/methods.hpp"

namespace prefagg {

inline constexpr std::size_t kMaxExhaustiveAlternatives = 20;

// --- violation search -------------------------------------------------------

struct CounterexampleReport {
  Profile profile;
  MethodSpec method;
  ScoreVector scores;
  ConfrontationVerdict verdict;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

struct SearchResult {
  std::optional<CounterexampleReport> report;
  /// Trials consumed: index of the counterexample + 1, or the whole budget.
  std::size_t trials = 0;
  /// Trials among those where the generator gave up or the method was inapplicable.
  std::size_t skipped = 0;
};

/// Looks for a profile on which `method` breaks the axiom. Trials are
/// independent (counter-based generation), so workers may split them; the
/// reported counterexample is always the one with the smallest trial index.
SearchResult scm_violation_search(const MethodSpec& method, const GeneratorConfig& gen, std::uint64_t seed,
                                  std::size_t budget, std::size_t workers = 1);

/// Re-runs the method on the stored profile and checks that the stored pair
/// is still violated.
bool reverify(const CounterexampleReport& report);

// --- macrovertices ----------------------------------------------------------

enum class MacrovertexReading {
  /// n_ik = n_jk for i, j in M and k outside (default).
  SharedOutsideCounts,
  /// n_ij = n_jk literally, for distinct i, j in M and k outside.
  AsPrinted,
};

bool is_macrovertex(const Matrix& counts, std::span<const std::size_t> members,
                    MacrovertexReading reading = MacrovertexReading::SharedOutsideCounts);

/// Nontrivial macrovertices (2 <= |M| <= n-1), members ascending, subsets in
/// bitmask order. Singletons and the full set always qualify and are omitted.
std::vector<std::vector<std::size_t>> enumerate_macrovertices(
    const Profile& profile, MacrovertexReading reading = MacrovertexReading::SharedOutsideCounts);

struct IndependenceVerdict {
  bool independent = true;
  std::size_t perturbations_run = 0;
  std::size_t skipped = 0;  // method inapplicable on the perturbed profile
  double max_change = 0.0;
  std::optional<Profile> witness;
  std::optional<std::size_t> witness_alternative;
};

inline constexpr double kIndependenceTol = 1e-7;

/// Tries explicit perturbations of `base`. Each must keep M a macrovertex
/// (else NotAMacrovertex) and differ from `base` only in the outcomes of
/// comparisons inside M (else InvalidPerturbation).
IndependenceVerdict macrovertex_independence_check(const MethodSpec& method, const Profile& base,
                                                   std::span<const std::size_t> members,
                                                   std::span<const Profile> perturbed);

/// Random within-M outcome redraws, reproducible from the seed.
IndependenceVerdict macrovertex_independence_test(const MethodSpec& method, const Profile& profile,
                                                  std::span<const std::size_t> members, std::size_t perturbations,
                                                  std::uint64_t seed);

// --- splitting balance ------------------------------------------------------

struct SplittingVerdict {
  bool pass = true;
  std::optional<Split> witness;
  std::size_t splits_checked = 0;
};

/// Every split where the second part never scores against the first must
/// leave some member of the first part at or above some member of the second.
SplittingVerdict splitting_balance_check(const Profile& profile, const ScoreVector& s);

}  // namespace prefagg
