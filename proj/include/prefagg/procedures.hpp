#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "prefagg/core.hpp"

namespace prefagg {

enum class Normalization { SumOne, SumZero, SumHalfN, None };
enum class Direction { Win, Loss };
enum class CombineMode { Difference, Ratio };
enum class MatrixVariant { A, C };

std::string_view to_string(Normalization n) noexcept;
std::string_view to_string(Direction d) noexcept;
std::string_view to_string(CombineMode c) noexcept;
std::string_view to_string(MatrixVariant v) noexcept;

using ParamValue = std::variant<double, std::string>;

struct ScoreVector {
  std::string method;
  Vector scores;
  Normalization normalization = Normalization::None;
  SolveDiagnostics diag{0, 0.0, true};
  std::map<std::string, ParamValue> params;
  std::optional<double> lambda;

  std::size_t size() const noexcept { return static_cast<std::size_t>(scores.size()); }
  double operator[](std::size_t i) const { return scores(static_cast<Eigen::Index>(i)); }
};

/// True when the scores are finite and honor the normalization tag within tol.
bool normalization_holds(const ScoreVector& s, double tol = 1e-9);

/// Plain win totals c_i^+ (judge-wise sum of a_ij^p).
ScoreVector row_sum_scores(const Profile& profile);

struct WeiResult {
  ScoreVector scores;
  double lambda = 0.0;
};

/// Perron eigenvector of A (WIN) or A^T (LOSS), normalized to sum one.
WeiResult wei_scores(const CumulativeMatrix& c, Direction direction);

struct WinLossPair {
  Vector win;
  Vector loss;
};

ScoreVector combine(const WinLossPair& wl, CombineMode mode);

/// Wei win- and loss-eigenvectors combined by difference (Hasse) or ratio
/// (Ramanujacharyulu).
ScoreVector hasse_scores(const CumulativeMatrix& c);
ScoreVector ramanujacharyulu_scores(const CumulativeMatrix& c);

/// C_ij = max(a_ij - a_ji, 0).
Matrix taylor_matrix(const CumulativeMatrix& c);

/// Largest admissible KTT epsilon is strictly below 1/r; the default is 0.5/r
/// (0.5 when the chosen matrix is nilpotent).
double ktt_default_epsilon(const CumulativeMatrix& c, MatrixVariant variant);

/// w = M (I - eps M)^{-1} 1 with M = A or C, transposed for LOSS.
ScoreVector ktt_scores(const CumulativeMatrix& c, std::optional<double> epsilon, MatrixVariant variant,
                       Direction direction);
ScoreVector ktt_combined(const CumulativeMatrix& c, std::optional<double> epsilon, MatrixVariant variant,
                         CombineMode mode);

/// w_i c_i^- = sum_j a_ij w_j (WIN), or the transposed system (LOSS); sum one.
ScoreVector fair_bets_scores(const CumulativeMatrix& c, Direction direction);
ScoreVector fair_bets_combined(const CumulativeMatrix& c, CombineMode mode);

/// Least-squares fit of skew outcomes by score differences, centered to sum zero.
ScoreVector least_squares_scores(const Profile& profile);

/// Upper bound 1/(m(n-2)) for the GRS epsilon; +inf when n <= 2.
double grs_epsilon_bound(std::size_t n, std::size_t m);
/// The bound itself, or 1/m when the bound degenerates (n <= 2).
double grs_default_epsilon(std::size_t n, std::size_t m);

/// Generalized row sums: (1 + eps m_i) s_i - eps sum_j n_ij s_j = eps gamma sum_j r_ij,
/// gamma = m n + 1/eps.
ScoreVector grs_scores(const Profile& profile, double epsilon);

}  // namespace prefagg
