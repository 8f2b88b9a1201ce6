#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "prefagg/core.hpp"
#include "prefagg/procedures.hpp"

namespace prefagg {

/// Scores closer than this are ties, both for opponent dominance and for
/// judging whether a demand is met.
inline constexpr double kScoreTieTol = 1e-9;

enum class Requirement { None, Weak, Strict };
std::string_view to_string(Requirement r) noexcept;

/// One comparison outcome of a confronted alternative, reduced to what the
/// axiom looks at: the outcome value and the opponent's score.
struct ConfrontItem {
  double outcome = 0.0;
  double opponent_score = 0.0;
};

/// A split of U_i and U_j plus a bijection between the remainders.
/// Indices point into the confronted multisets.
struct Witness {
  std::vector<std::size_t> i_extra;  // U_i^I, all wins
  std::vector<std::size_t> j_extra;  // U_j^I, all losses
  std::vector<std::pair<std::size_t, std::size_t>> matching;
};

struct Demand {
  Requirement requirement = Requirement::None;
  std::optional<Witness> witness;
};

/// Decides what the axiom demands of (i, j) given both outcome multisets.
///
/// Elements of U_i below 1 and elements of U_j above 0 must be matched; a
/// matched pair needs outcome and opponent-score dominance. A single maximum
/// weight assignment finds a witness covering every required element and,
/// among those, one maximizing (strict pairs + unmatched elements), which is
/// positive exactly when a strict witness exists.
Demand confront_multisets(std::span<const ConfrontItem> ui, std::span<const ConfrontItem> uj,
                          double tol = kScoreTieTol);

/// Checks a witness clause by clause. Returns the strongest requirement it
/// supports, or nullopt if it is not a witness at all.
std::optional<Requirement> validate_witness(std::span<const ConfrontItem> ui, std::span<const ConfrontItem> uj,
                                            const Witness& witness, double tol = kScoreTieTol);

bool requirement_met(Requirement r, double si, double sj, double tol = kScoreTieTol);

struct ConfrontationVerdict {
  std::size_t i = 0;
  std::size_t j = 0;
  Requirement requirement = Requirement::None;
  std::optional<Witness> witness;
  bool satisfied = true;
  OutcomeMultiset u_i;
  OutcomeMultiset u_j;
};

std::vector<ConfrontItem> confront_items(const OutcomeMultiset& u, const ScoreVector& s);

ConfrontationVerdict scm_confront(const Profile& profile, const ScoreVector& s, std::size_t i, std::size_t j);

/// Confronts every ordered pair and keeps the unsatisfied verdicts.
std::vector<ConfrontationVerdict> scm_audit(const Profile& profile, const ScoreVector& s);

}  // namespace prefagg
