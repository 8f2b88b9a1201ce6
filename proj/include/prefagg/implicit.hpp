#pragma once

#include <functional>
#include <optional>
#include <string>

#include "prefagg/numerics.hpp"
#include "prefagg/procedures.hpp"

namespace prefagg {

enum class ProfileDomain { Indivisible, All };

/// A score vector defined implicitly by f_i(profile, s) = 0 for every i,
/// where each f_i increases in the outcomes of i and in opponent scores and
/// decreases in s_i. Solved either by a fixed-point step or directly.
struct ImplicitSystem {
  std::string name;
  ProfileDomain domain = ProfileDomain::Indivisible;
  Normalization normalization = Normalization::None;
  std::function<Vector(const Profile&, const Vector&)> residual;
  std::function<bool(const Vector&)> feasible;
  /// Binds a profile to its fixed-point update.
  std::function<numerics::StepFn(const Profile&)> make_step;
  /// Initial iterate for a profile with n alternatives.
  std::function<Vector(std::size_t)> initial;
  /// Exact solver for linear systems; when set, make_step is unused.
  std::function<ScoreVector(const Profile&)> direct;
  std::map<std::string, ParamValue> params;
};

/// f_i = sum_{j,p} (a_ij^p - s_i / (s_i + s_j)); sum one.
ImplicitSystem zermelo_bt_system();
/// f_i = sum_j (a_ij s_j / s_i - a_ji s_i / s_j); sum one.
ImplicitSystem daniels_system();
/// f_i = sum_j (a_ij s_j (1 - s_i) - a_ji s_i (1 - s_j)); fixed point reached from 1/2.
ImplicitSystem cowden_system();
/// f_i = eps sum_{j,p} (gamma r_ij^p - (s_i - s_j)) - s_i.
ImplicitSystem grs_system(double epsilon);

inline constexpr double kImplicitResidualTol = 1e-10;

ScoreVector implicit_scores(const ImplicitSystem& system, const Profile& profile);

}  // namespace prefagg
