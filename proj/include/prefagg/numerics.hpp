#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "prefagg/core.hpp"

namespace prefagg::numerics {

inline constexpr double kDefaultPowerTol = 1e-12;
inline constexpr std::size_t kDefaultPowerMaxIter = 100000;
inline constexpr double kPivotThreshold = 1e-12;

struct EigenPair {
  double lambda = 0.0;
  Vector vector;  // positive, sums to one
  SolveDiagnostics diag;
};

/// Dominant (Perron) eigenpair of a nonnegative irreducible matrix.
///
/// Iterates on M + cI with c the mean row sum, which makes the iteration
/// matrix primitive so periodic matrices (cycles) converge too. Stops when
/// ||Mv - lambda v||_inf <= tol * lambda. A zero matrix yields lambda = 0 and
/// the uniform vector. Throws NoConvergence (diagnostics attached).
EigenPair power_iteration(const Matrix& m, double tol = kDefaultPowerTol,
                          std::size_t max_iter = kDefaultPowerMaxIter,
                          std::optional<Vector> start = std::nullopt);

/// Spectral radius of a nonnegative matrix: the largest Perron root over its
/// strongly connected blocks (singleton blocks without a loop contribute 0).
double spectral_radius(const Matrix& m, double tol = kDefaultPowerTol);

/// Partial-pivot LU solve. Throws Singular when a pivot falls below 1e-12 or
/// the residual check ||Mx - b||_inf <= 1e-10 (1 + ||b||_inf) fails.
Vector solve_linear(const Matrix& m, const Vector& b);

using StepFn = std::function<Vector(const Vector&)>;
using FeasibleFn = std::function<bool(const Vector&)>;

struct FixedPointResult {
  Vector x;
  SolveDiagnostics diag;
};

struct FixedPointOptions {
  double damping = 1.0;
  double tol = 1e-13;
  std::size_t max_iter = 200000;
  /// Consecutive steps without a new best residual that trigger the switch
  /// to damping 0.5.
  std::size_t oscillation_window = 10;
};

/// x <- (1 - d) x + d step(x) until ||x - step(x)||_inf <= tol.
/// Throws NoConvergence or DomainExit (iterate left the feasible region).
FixedPointResult fixed_point(const StepFn& step, const Vector& init, const FixedPointOptions& options,
                             const FeasibleFn& feasible = {});

}  // namespace prefagg::numerics
