#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefagg/procedures.hpp"

namespace prefagg {

enum class MethodKind {
  RowSum,
  Wei,
  Hasse,
  Ramanujacharyulu,
  Ktt,
  FairBets,
  LeastSquares,
  Grs,
  ZermeloBt,
  Daniels,
  Cowden,
};

/// A scoring procedure plus the parameters it was asked to run with.
struct MethodSpec {
  MethodKind kind = MethodKind::RowSum;
  std::optional<double> epsilon;
  MatrixVariant variant = MatrixVariant::A;
  Direction direction = Direction::Win;
  /// ktt and fair_bets only: combine win- and loss-scores instead of
  /// returning the single `direction`.
  std::optional<CombineMode> combine;
};

/// Accepts the base names (row_sum, wei, hasse, ramanujacharyulu, ktt,
/// fair_bets, least_squares, grs, zermelo_bt, daniels, cowden) and the
/// combined shorthands ktt-difference, ktt-ratio, fair_bets-difference,
/// fair_bets-ratio. Throws UnknownMethod.
MethodSpec parse_method(std::string_view name);

std::string method_name(const MethodSpec& spec);
const std::vector<std::string>& known_method_names();

ScoreVector rate(const Profile& profile, const MethodSpec& spec);

}  // namespace prefagg
