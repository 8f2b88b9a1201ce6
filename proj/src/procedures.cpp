#include "prefagg/procedures.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "prefagg/numerics.hpp"

namespace prefagg {

std::string_view to_string(Normalization n) noexcept {
  switch (n) {
    case Normalization::SumOne: return "SUM_ONE";
    case Normalization::SumZero: return "SUM_ZERO";
    case Normalization::SumHalfN: return "SUM_HALF_N";
    case Normalization::None: return "NONE";
  }
  return "NONE";
}

std::string_view to_string(Direction d) noexcept { return d == Direction::Win ? "win" : "loss"; }
std::string_view to_string(CombineMode c) noexcept { return c == CombineMode::Difference ? "difference" : "ratio"; }
std::string_view to_string(MatrixVariant v) noexcept { return v == MatrixVariant::A ? "A" : "C"; }

bool normalization_holds(const ScoreVector& s, double tol) {
  if (!s.scores.allFinite()) return false;
  const double sum = s.scores.sum();
  switch (s.normalization) {
    case Normalization::SumOne: return std::abs(sum - 1.0) <= tol;
    case Normalization::SumZero: return std::abs(sum) <= tol;
    case Normalization::SumHalfN: return std::abs(sum - 0.5 * static_cast<double>(s.scores.size())) <= tol;
    case Normalization::None: return true;
  }
  return false;
}

namespace {

void require_indivisible(const CumulativeMatrix& c, const char* method) {
  if (!is_indivisible(c)) {
    throw Error(ErrorCode::NotIndivisible, std::string(method) + " requires an indivisible profile");
  }
}

Matrix oriented(const Matrix& m, Direction direction) {
  return direction == Direction::Win ? m : Matrix(m.transpose());
}

}  // namespace

ScoreVector row_sum_scores(const Profile& profile) {
  ScoreVector out;
  out.method = "row_sum";
  out.scores = Vector::Zero(static_cast<Eigen::Index>(profile.alternative_count()));
  for (const auto& ballot : profile.judges()) {
    for (const auto& cmp : ballot) {
      out.scores(cmp.a) += cmp.value_for_a();
      out.scores(cmp.b) += cmp.value_for_b();
    }
  }
  return out;
}

WeiResult wei_scores(const CumulativeMatrix& c, Direction direction) {
  require_indivisible(c, "wei");
  auto eig = numerics::power_iteration(oriented(c.wins, direction));
  WeiResult out;
  out.lambda = eig.lambda;
  out.scores.method = "wei";
  out.scores.scores = eig.vector;
  out.scores.normalization = Normalization::SumOne;
  out.scores.diag = eig.diag;
  out.scores.params["direction"] = std::string(to_string(direction));
  out.scores.lambda = eig.lambda;
  return out;
}

ScoreVector combine(const WinLossPair& wl, CombineMode mode) {
  if (wl.win.size() != wl.loss.size()) throw Error(ErrorCode::InvalidDocument, "win/loss size mismatch");
  ScoreVector out;
  out.method = "combine";
  out.params["combine"] = std::string(to_string(mode));
  if (mode == CombineMode::Difference) {
    out.scores = wl.win - wl.loss;
  } else {
    if ((wl.loss.array() <= 0.0).any()) {
      throw Error(ErrorCode::DivideByZero, "ratio combination needs strictly positive loss scores");
    }
    out.scores = wl.win.cwiseQuotient(wl.loss);
  }
  return out;
}

namespace {

ScoreVector combined_eigen(const CumulativeMatrix& c, CombineMode mode, const char* name) {
  auto win = wei_scores(c, Direction::Win);
  auto loss = wei_scores(c, Direction::Loss);
  auto out = combine({win.scores.scores, loss.scores.scores}, mode);
  out.method = name;
  out.lambda = win.lambda;
  out.diag = win.scores.diag;
  out.diag.iterations += loss.scores.diag.iterations;
  out.diag.residual = std::max(win.scores.diag.residual, loss.scores.diag.residual);
  return out;
}

}  // namespace

ScoreVector hasse_scores(const CumulativeMatrix& c) { return combined_eigen(c, CombineMode::Difference, "hasse"); }

ScoreVector ramanujacharyulu_scores(const CumulativeMatrix& c) {
  return combined_eigen(c, CombineMode::Ratio, "ramanujacharyulu");
}

Matrix taylor_matrix(const CumulativeMatrix& c) { return c.skew.cwiseMax(0.0); }

namespace {

Matrix ktt_matrix(const CumulativeMatrix& c, MatrixVariant variant) {
  return variant == MatrixVariant::A ? c.wins : taylor_matrix(c);
}

}  // namespace

double ktt_default_epsilon(const CumulativeMatrix& c, MatrixVariant variant) {
  const double r = numerics::spectral_radius(ktt_matrix(c, variant));
  return r > 0.0 ? 0.5 / r : 0.5;
}

ScoreVector ktt_scores(const CumulativeMatrix& c, std::optional<double> epsilon, MatrixVariant variant,
                       Direction direction) {
  const Matrix m = oriented(ktt_matrix(c, variant), direction);
  const double r = numerics::spectral_radius(m);
  const double eps = epsilon ? *epsilon : (r > 0.0 ? 0.5 / r : 0.5);
  if (!(eps >= 0.0) || !std::isfinite(eps) || (r > 0.0 && eps * r >= 1.0)) {
    throw Error(ErrorCode::EpsilonOutOfRange,
                "ktt epsilon " + std::to_string(eps) + " must satisfy 0 <= eps < 1/r with r = " + std::to_string(r));
  }
  const auto n = m.rows();
  const Matrix system = Matrix::Identity(n, n) - eps * m;
  const Vector y = numerics::solve_linear(system, Vector::Ones(n));

  ScoreVector out;
  out.method = "ktt";
  out.scores = m * y;
  out.diag.residual = (system * y - Vector::Ones(n)).cwiseAbs().maxCoeff();
  out.params["epsilon"] = eps;
  out.params["variant"] = std::string(to_string(variant));
  out.params["direction"] = std::string(to_string(direction));
  out.params["spectral_radius"] = r;
  return out;
}

ScoreVector ktt_combined(const CumulativeMatrix& c, std::optional<double> epsilon, MatrixVariant variant,
                         CombineMode mode) {
  const double eps = epsilon ? *epsilon : ktt_default_epsilon(c, variant);
  auto win = ktt_scores(c, eps, variant, Direction::Win);
  auto loss = ktt_scores(c, eps, variant, Direction::Loss);
  auto out = combine({win.scores, loss.scores}, mode);
  out.method = "ktt";
  out.params["epsilon"] = eps;
  out.params["variant"] = std::string(to_string(variant));
  out.params["spectral_radius"] = win.params["spectral_radius"];
  out.diag.residual = std::max(win.diag.residual, loss.diag.residual);
  return out;
}

ScoreVector fair_bets_scores(const CumulativeMatrix& c, Direction direction) {
  require_indivisible(c, "fair_bets");
  const Matrix a = oriented(c.wins, direction);
  const auto n = a.rows();
  const Vector losses = a.colwise().sum().transpose();

  // Rows of diag(c^-) - A sum to a zero combination; swap the last row for the
  // normalization sum(w) = 1.
  Matrix system = Matrix(losses.asDiagonal()) - a;
  system.row(n - 1).setOnes();
  Vector rhs = Vector::Zero(n);
  rhs(n - 1) = 1.0;
  const Vector w = numerics::solve_linear(system, rhs);

  ScoreVector out;
  out.method = "fair_bets";
  out.scores = w;
  out.normalization = Normalization::SumOne;
  out.diag.residual = (losses.cwiseProduct(w) - a * w).cwiseAbs().maxCoeff();
  out.params["direction"] = std::string(to_string(direction));
  if ((w.array() <= 0.0).any() || !(out.diag.residual <= 1e-10)) {
    out.diag.converged = false;
    throw Error(ErrorCode::NoConvergence, "fair bets system produced an inadmissible solution", out.diag);
  }
  return out;
}

ScoreVector fair_bets_combined(const CumulativeMatrix& c, CombineMode mode) {
  auto win = fair_bets_scores(c, Direction::Win);
  auto loss = fair_bets_scores(c, Direction::Loss);
  auto out = combine({win.scores, loss.scores}, mode);
  out.method = "fair_bets";
  out.diag.residual = std::max(win.diag.residual, loss.diag.residual);
  return out;
}

ScoreVector least_squares_scores(const Profile& profile) {
  const auto c = cumulative_matrix(profile);
  const auto degrees = degree_summary(c);
  for (Eigen::Index i = 0; i < degrees.comparisons.size(); ++i) {
    if (degrees.comparisons(i) == 0.0) {
      throw Error(ErrorCode::IsolatedAlternative, "alternative '" + profile.label(i) + "' is never compared");
    }
  }
  if (!is_connected(profile)) throw Error(ErrorCode::Disconnected, "least squares needs a connected profile");

  const auto n = static_cast<Eigen::Index>(c.size());
  const Matrix laplacian = Matrix(degrees.comparisons.asDiagonal()) - c.counts;
  const Vector rhs = c.skew.rowwise().sum();
  // The normal equations have rank n-1 with kernel 1; adding 11^T pins sum(s) = 0.
  const Vector s = numerics::solve_linear(laplacian + Matrix::Ones(n, n), rhs);

  ScoreVector out;
  out.method = "least_squares";
  out.scores = s;
  out.normalization = Normalization::SumZero;
  out.diag.residual = (laplacian * s - rhs).cwiseAbs().maxCoeff();
  return out;
}

double grs_epsilon_bound(std::size_t n, std::size_t m) {
  if (n <= 2) return std::numeric_limits<double>::infinity();
  return 1.0 / (static_cast<double>(m) * static_cast<double>(n - 2));
}

double grs_default_epsilon(std::size_t n, std::size_t m) {
  return n <= 2 ? 1.0 / static_cast<double>(m) : grs_epsilon_bound(n, m);
}

ScoreVector grs_scores(const Profile& profile, double epsilon) {
  const std::size_t n = profile.alternative_count();
  const std::size_t m = profile.judge_count();
  const double bound = grs_epsilon_bound(n, m);
  // Relative slack so that the bound typed as a decimal still counts as admissible.
  if (!(epsilon > 0.0) || !std::isfinite(epsilon) || epsilon > bound * (1.0 + 1e-12)) {
    throw Error(ErrorCode::EpsilonOutOfRange, "grs epsilon " + std::to_string(epsilon) +
                                                  " must lie in (0, " + std::to_string(bound) + "]");
  }
  const double gamma = static_cast<double>(m * n) + 1.0 / epsilon;

  const auto c = cumulative_matrix(profile);
  const auto degrees = degree_summary(c);
  const auto dim = static_cast<Eigen::Index>(n);
  const Matrix laplacian = Matrix(degrees.comparisons.asDiagonal()) - c.counts;
  const Matrix system = Matrix::Identity(dim, dim) + epsilon * laplacian;
  const Vector rhs = epsilon * gamma * c.skew.rowwise().sum();
  const Vector s = numerics::solve_linear(system, rhs);

  ScoreVector out;
  out.method = "grs";
  out.scores = s;
  out.diag.residual = (system * s - rhs).cwiseAbs().maxCoeff();
  out.params["epsilon"] = epsilon;
  out.params["gamma"] = gamma;
  return out;
}

}  // namespace prefagg
