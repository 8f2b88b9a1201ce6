#include "prefagg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace prefagg::numerics {

EigenPair power_iteration(const Matrix& m, double tol, std::size_t max_iter, std::optional<Vector> start) {
  const auto n = m.rows();
  if (m.cols() != n || n == 0) throw Error(ErrorCode::InvalidDocument, "power iteration needs a square matrix");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidDocument, "power iteration tolerance must be positive");

  Vector v = start ? *start : Vector::Constant(n, 1.0);
  if (v.size() != n || (v.array() <= 0.0).any()) {
    throw Error(ErrorCode::InvalidDocument, "power iteration start vector must be positive");
  }
  v /= v.sum();

  const double shift = m.sum() / static_cast<double>(n);
  if (shift == 0.0) return {0.0, Vector::Constant(n, 1.0 / static_cast<double>(n)), {0, 0.0, true}};

  SolveDiagnostics diag;
  double lambda = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    Vector mv = m * v;
    lambda = mv.sum();  // v sums to one
    diag.iterations = it;
    diag.residual = (mv - lambda * v).cwiseAbs().maxCoeff();
    if (lambda > 0.0 && diag.residual <= tol * lambda) {
      diag.converged = true;
      return {lambda, v, diag};
    }
    v = mv + shift * v;
    v /= v.sum();
  }
  diag.iterations = max_iter;
  throw Error(ErrorCode::NoConvergence,
              "power iteration did not converge in " + std::to_string(max_iter) + " iterations", diag);
}

double spectral_radius(const Matrix& m, double tol) {
  double radius = 0.0;
  for (const auto& comp : strong_components(m)) {
    const auto k = static_cast<Eigen::Index>(comp.size());
    if (k == 1 && m(comp[0], comp[0]) == 0.0) continue;
    Matrix block(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) block(r, c) = m(comp[r], comp[c]);
    radius = std::max(radius, power_iteration(block, tol).lambda);
  }
  return radius;
}

Vector solve_linear(const Matrix& m, const Vector& b) {
  if (m.rows() != m.cols() || m.rows() != b.size()) {
    throw Error(ErrorCode::InvalidDocument, "linear system dimensions do not match");
  }
  if (m.rows() == 0) return Vector{};
  Eigen::PartialPivLU<Matrix> lu(m);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot >= kPivotThreshold)) {
    throw Error(ErrorCode::Singular, "matrix is singular (pivot " + std::to_string(min_pivot) + ")");
  }
  Vector x = lu.solve(b);
  const double bound = 1e-10 * (1.0 + b.cwiseAbs().maxCoeff());
  double residual = (m * x - b).cwiseAbs().maxCoeff();
  // A couple of refinement sweeps rescue mildly ill-conditioned systems.
  for (int sweep = 0; sweep < 3 && !(residual <= bound); ++sweep) {
    x += lu.solve(b - m * x);
    residual = (m * x - b).cwiseAbs().maxCoeff();
  }
  if (!(residual <= bound)) {
    throw Error(ErrorCode::Singular, "residual check failed (" + std::to_string(residual) + ")");
  }
  return x;
}

FixedPointResult fixed_point(const StepFn& step, const Vector& init, const FixedPointOptions& options,
                             const FeasibleFn& feasible) {
  if (!(options.damping > 0.0 && options.damping <= 1.0)) {
    throw Error(ErrorCode::InvalidDocument, "damping must lie in (0, 1]");
  }
  SolveDiagnostics diag;
  diag.residual = std::numeric_limits<double>::infinity();
  if (options.max_iter == 0) throw Error(ErrorCode::NoConvergence, "no iterations allowed", diag);

  double damping = options.damping;
  Vector x = init;
  double best = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;
  for (std::size_t it = 0; it < options.max_iter; ++it) {
    if (!x.allFinite() || (feasible && !feasible(x))) {
      diag.iterations = it;
      throw Error(ErrorCode::DomainExit, "iterate left the feasible region", diag);
    }
    Vector next = step(x);
    diag.iterations = it;
    diag.residual = (next - x).cwiseAbs().maxCoeff();
    if (diag.residual <= options.tol) {
      diag.converged = true;
      return {x, diag};
    }
    if (!std::isfinite(diag.residual)) throw Error(ErrorCode::DomainExit, "step produced a non-finite value", diag);
    // A 2-cycle never sets a new best residual, even with rounding noise.
    if (diag.residual < best * (1.0 - 1e-9)) {
      best = diag.residual;
      stalled = 0;
    } else {
      ++stalled;
    }
    if (stalled >= options.oscillation_window && damping > 0.5) {
      damping = 0.5;
      stalled = 0;
    }
    x = (1.0 - damping) * x + damping * next;
  }
  diag.iterations = options.max_iter;
  throw Error(ErrorCode::NoConvergence,
              "fixed-point iteration did not converge in " + std::to_string(options.max_iter) + " iterations",
              diag);
}

}  // namespace prefagg::numerics
