#include "prefagg/implicit.hpp"

#include <cmath>
#include <string>

namespace prefagg {

namespace {

Vector uniform_sum_one(std::size_t n) { return Vector::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n)); }

bool all_positive(const Vector& s) { return (s.array() > 0.0).all(); }

}  // namespace

ImplicitSystem zermelo_bt_system() {
  ImplicitSystem sys;
  sys.name = "zermelo_bt";
  sys.domain = ProfileDomain::Indivisible;
  sys.normalization = Normalization::SumOne;
  sys.residual = [](const Profile& p, const Vector& s) {
    Vector f = Vector::Zero(s.size());
    for (const auto& ballot : p.judges()) {
      for (const auto& cmp : ballot) {
        const double total = s(cmp.a) + s(cmp.b);
        f(cmp.a) += cmp.value_for_a() - s(cmp.a) / total;
        f(cmp.b) += cmp.value_for_b() - s(cmp.b) / total;
      }
    }
    return f;
  };
  sys.feasible = all_positive;
  sys.make_step = [](const Profile& p) -> numerics::StepFn {
    auto c = cumulative_matrix(p);
    Vector wins = c.wins.rowwise().sum();
    return [c = std::move(c), wins = std::move(wins)](const Vector& s) {
      const auto n = s.size();
      Vector next(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        double denom = 0.0;
        for (Eigen::Index j = 0; j < n; ++j)
          if (c.counts(i, j) > 0.0) denom += c.counts(i, j) / (s(i) + s(j));
        next(i) = wins(i) / denom;
      }
      return Vector(next / next.sum());
    };
  };
  sys.initial = uniform_sum_one;
  return sys;
}

ImplicitSystem daniels_system() {
  ImplicitSystem sys;
  sys.name = "daniels";
  sys.domain = ProfileDomain::Indivisible;
  sys.normalization = Normalization::SumOne;
  sys.residual = [](const Profile& p, const Vector& s) {
    const auto c = cumulative_matrix(p);
    Vector f = Vector::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
      for (Eigen::Index j = 0; j < s.size(); ++j)
        f(i) += c.wins(i, j) * s(j) / s(i) - c.wins(j, i) * s(i) / s(j);
    return f;
  };
  sys.feasible = all_positive;
  sys.make_step = [](const Profile& p) -> numerics::StepFn {
    return [c = cumulative_matrix(p)](const Vector& s) {
      const Vector gain = c.wins * s;
      const Vector drag = c.wins.transpose() * s.cwiseInverse();
      Vector next = gain.cwiseQuotient(drag).cwiseSqrt();
      return Vector(next / next.sum());
    };
  };
  sys.initial = uniform_sum_one;
  return sys;
}

ImplicitSystem cowden_system() {
  ImplicitSystem sys;
  sys.name = "cowden";
  sys.domain = ProfileDomain::Indivisible;
  sys.normalization = Normalization::None;
  sys.residual = [](const Profile& p, const Vector& s) {
    const auto c = cumulative_matrix(p);
    Vector f = Vector::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
      for (Eigen::Index j = 0; j < s.size(); ++j)
        f(i) += c.wins(i, j) * s(j) * (1.0 - s(i)) - c.wins(j, i) * s(i) * (1.0 - s(j));
    return f;
  };
  sys.feasible = [](const Vector& s) { return (s.array() > 0.0).all() && (s.array() < 1.0).all(); };
  sys.make_step = [](const Profile& p) -> numerics::StepFn {
    return [c = cumulative_matrix(p)](const Vector& s) {
      const Vector gain = c.wins * s;
      const Vector drag = c.wins.transpose() * (Vector::Ones(s.size()) - s);
      return Vector(gain.cwiseQuotient(gain + drag));
    };
  };
  sys.initial = [](std::size_t n) { return Vector::Constant(static_cast<Eigen::Index>(n), 0.5); };
  return sys;
}

ImplicitSystem grs_system(double epsilon) {
  ImplicitSystem sys;
  sys.name = "grs";
  sys.domain = ProfileDomain::All;
  sys.normalization = Normalization::None;
  sys.params["epsilon"] = epsilon;
  sys.residual = [epsilon](const Profile& p, const Vector& s) {
    const double gamma = static_cast<double>(p.judge_count() * p.alternative_count()) + 1.0 / epsilon;
    Vector f = -s;
    for (const auto& ballot : p.judges()) {
      for (const auto& cmp : ballot) {
        const double r = cmp.value_for_a() - cmp.value_for_b();
        const double diff = s(cmp.a) - s(cmp.b);
        f(cmp.a) += epsilon * (gamma * r - diff);
        f(cmp.b) += epsilon * (-gamma * r + diff);
      }
    }
    return f;
  };
  sys.feasible = [](const Vector& s) { return s.allFinite(); };
  sys.direct = [epsilon](const Profile& p) { return grs_scores(p, epsilon); };
  return sys;
}

ScoreVector implicit_scores(const ImplicitSystem& system, const Profile& profile) {
  if (system.domain == ProfileDomain::Indivisible && !is_indivisible(cumulative_matrix(profile))) {
    throw Error(ErrorCode::NotIndivisible, system.name + " requires an indivisible profile");
  }

  ScoreVector out;
  if (system.direct) {
    out = system.direct(profile);
  } else {
    const std::size_t n = profile.alternative_count();
    out.scores = system.initial(n);
    if (n > 1) {
      numerics::FixedPointOptions options;
      auto fp = numerics::fixed_point(system.make_step(profile), out.scores, options, system.feasible);
      out.scores = fp.x;
      out.diag = fp.diag;
    }
  }
  out.method = system.name;
  out.normalization = system.normalization;
  for (const auto& [k, v] : system.params) out.params[k] = v;

  const Vector f = system.residual(profile, out.scores);
  const double worst = f.size() ? f.cwiseAbs().maxCoeff() : 0.0;
  out.params["max_residual"] = worst;
  out.diag.residual = worst;
  if (!(worst <= kImplicitResidualTol) || (system.feasible && !system.feasible(out.scores))) {
    out.diag.converged = false;
    throw Error(ErrorCode::NoConvergence,
                system.name + " residual " + std::to_string(worst) + " exceeds tolerance", out.diag);
  }
  return out;
}

}  // namespace prefagg
