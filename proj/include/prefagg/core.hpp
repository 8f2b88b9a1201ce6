#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "prefagg/error.hpp"

namespace prefagg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Outcome { AWins, BWins, Draw };

/// One judge's response on an unordered pair, stored with alternative indices.
struct Comparison {
  std::size_t a = 0;
  std::size_t b = 0;
  Outcome outcome = Outcome::Draw;

  /// a_ab^p in {0, 1/2, 1}.
  double value_for_a() const noexcept;
  double value_for_b() const noexcept { return 1.0 - value_for_a(); }
  bool involves(std::size_t i) const noexcept { return a == i || b == i; }
};

using Ballot = std::vector<Comparison>;

/// Label-level comparison as it appears in an external document.
struct RawComparison {
  std::string a;
  std::string b;
  Outcome outcome = Outcome::Draw;
};

struct RawProfile {
  std::vector<std::string> alternatives;
  std::vector<std::vector<RawComparison>> judges;
};

/// Per-judge incomplete paired comparisons over a shared alternative set.
/// Immutable once built; every constructor path validates the response model
/// (no self comparisons, one response per pair per judge, n >= 1, m >= 1).
class Profile {
 public:
  Profile(std::vector<std::string> alternatives, std::vector<Ballot> judges);

  std::size_t alternative_count() const noexcept { return alternatives_.size(); }
  std::size_t judge_count() const noexcept { return judges_.size(); }
  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<Ballot>& judges() const noexcept { return judges_; }
  const std::string& label(std::size_t i) const { return alternatives_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t comparison_count() const noexcept;

 private:
  std::vector<std::string> alternatives_;
  std::vector<Ballot> judges_;
};

Profile validate_profile(const RawProfile& raw);

/// Aggregated outcomes: wins(i,j) = a_ij, counts(i,j) = n_ij, skew(i,j) = a_ij - a_ji.
/// counts holds integral values; it is stored as doubles for matrix arithmetic.
struct CumulativeMatrix {
  Matrix wins;
  Matrix counts;
  Matrix skew;

  std::size_t size() const noexcept { return static_cast<std::size_t>(wins.rows()); }

  /// Builds a cumulative matrix straight from an outcome matrix; counts are
  /// taken as a + a^T. Throws InvalidDocument for negative or diagonal entries.
  static CumulativeMatrix from_outcomes(const Matrix& wins);
};

CumulativeMatrix cumulative_matrix(const Profile& profile);

struct DegreeSummary {
  Vector win_total;
  Vector loss_total;
  Vector comparisons;
};

DegreeSummary degree_summary(const CumulativeMatrix& c);

/// Bipartition (first, second) with no positive outcome of `second` against `first`.
struct Split {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

bool is_indivisible(const CumulativeMatrix& c);
std::optional<Split> divisible_split(const CumulativeMatrix& c);
bool verify_split(const CumulativeMatrix& c, const Split& split);

bool is_connected(const Profile& profile);

/// Strongly connected components of the digraph with an arc i->j when m(i,j) > 0.
std::vector<std::vector<std::size_t>> strong_components(const Matrix& m);

struct OutcomeElement {
  double outcome = 0.0;
  std::size_t opponent = 0;
  std::size_t judge = 0;
};

struct OutcomeMultiset {
  std::size_t owner = 0;
  std::vector<OutcomeElement> elements;
};

OutcomeMultiset outcome_multiset(const Profile& profile, std::size_t i);

/// Relabels alternatives: alternative i of `profile` becomes alternative
/// perm[i] of the result.
Profile permute_alternatives(const Profile& profile, std::span<const std::size_t> perm);
/// Reorders judges: judge p of the result is judge order[p] of `profile`.
Profile permute_judges(const Profile& profile, std::span<const std::size_t> order);

}  // namespace prefagg
