#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "prefagg/confrontation.hpp"
#include "prefagg/fixtures.hpp"
#include "prefagg/generator.hpp"
#include "prefagg/implicit.hpp"
#include "prefagg/methods.hpp"
#include "prefagg/numerics.hpp"
#include "support.hpp"

using namespace prefagg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Empty;
}

double max_gap(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Both pairs compared once each way by one judge each: perfectly symmetric.
Profile symmetric_profile() {
  return support::profile(3, {{{0, 1, Outcome::AWins}, {1, 2, Outcome::AWins}, {0, 2, Outcome::Draw}},
                              {{0, 1, Outcome::BWins}, {1, 2, Outcome::BWins}}});
}

}  // namespace

TEST_CASE("row sums") {
  const auto s = row_sum_scores(fixture("fig1").profile);
  CHECK(s.scores == (Vector(4) << 4.5, 1.5, 1.5, 1.5).finished());
  CHECK(s.normalization == Normalization::None);
  CHECK(row_sum_scores(support::single_judge(2, {{0, 1, Outcome::AWins}})).scores == Vector((Vector(2) << 1, 0).finished()));
  CHECK(row_sum_scores(support::single_judge(2, {{0, 1, Outcome::Draw}})).scores == Vector::Constant(2, 0.5));
}

TEST_CASE("wei") {
  auto r = wei_scores(cumulative_matrix(support::three_cycle()), Direction::Win);
  CHECK(max_gap(r.scores.scores, Vector::Constant(3, 1.0 / 3)) <= 1e-12);
  CHECK(r.lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.scores.normalization == Normalization::SumOne);

  const auto p2 = fixture("prop2").profile;
  r = wei_scores(cumulative_matrix(p2), Direction::Win);
  CHECK(std::abs(r.scores[1] - r.scores[2]) <= 1e-9);

  r = wei_scores(cumulative_matrix(support::two_to_one()), Direction::Win);
  const double r2 = std::sqrt(2.0);
  CHECK(r.lambda == doctest::Approx(r2).epsilon(1e-11));
  CHECK(r.scores[0] == doctest::Approx(r2 / (1 + r2)).epsilon(1e-11));

  CHECK(code_of([] { wei_scores(cumulative_matrix(fixture("fig1").profile), Direction::Win); }) ==
        ErrorCode::NotIndivisible);
}

TEST_CASE("wei win and loss coincide on a symmetric profile") {
  const auto c = cumulative_matrix(symmetric_profile());
  CHECK((c.wins - c.wins.transpose()).cwiseAbs().maxCoeff() == 0.0);
  const auto w = wei_scores(c, Direction::Win).scores.scores;
  const auto l = wei_scores(c, Direction::Loss).scores.scores;
  CHECK(max_gap(w, l) <= 1e-10);
  CHECK(hasse_scores(c).scores.cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("combine") {
  WinLossPair same{Vector::Constant(3, 0.25), Vector::Constant(3, 0.25)};
  CHECK(combine(same, CombineMode::Difference).scores == Vector::Zero(3));
  CHECK(combine(same, CombineMode::Ratio).scores == Vector::Ones(3));

  WinLossPair wl{(Vector(2) << 2.0 / 3, 1.0 / 3).finished(), (Vector(2) << 1.0 / 3, 2.0 / 3).finished()};
  const auto d = combine(wl, CombineMode::Difference);
  CHECK(d[0] == doctest::Approx(1.0 / 3));
  CHECK(d[1] == doctest::Approx(-1.0 / 3));
  const auto q = combine(wl, CombineMode::Ratio);
  CHECK(q[0] == doctest::Approx(2.0));
  CHECK(q[1] == doctest::Approx(0.5));

  WinLossPair zero{Vector::Ones(2), (Vector(2) << 1.0, 0.0).finished()};
  CHECK(code_of([&] { combine(zero, CombineMode::Ratio); }) == ErrorCode::DivideByZero);
}

TEST_CASE("taylor matrix") {
  const auto pure = cumulative_matrix(support::single_judge(3, {{0, 1, Outcome::AWins}, {1, 2, Outcome::AWins}}));
  CHECK(taylor_matrix(pure) == pure.wins);
  CHECK(taylor_matrix(cumulative_matrix(support::single_judge(2, {{0, 1, Outcome::Draw}}))) == Matrix::Zero(2, 2));
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 1) = 3.0;
  CHECK(taylor_matrix(cumulative_matrix(fixture("fig1").profile)) == expected);
}

TEST_CASE("ktt") {
  GeneratorConfig gen;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto c = cumulative_matrix(*generate_profile(gen, 21, t));
    CHECK(max_gap(ktt_scores(c, 0.0, MatrixVariant::A, Direction::Win).scores, c.wins.rowwise().sum()) <= 1e-12);
  }
  const auto cycle = ktt_scores(cumulative_matrix(support::three_cycle()), 0.5, MatrixVariant::A, Direction::Win);
  CHECK(cycle.scores.maxCoeff() - cycle.scores.minCoeff() <= 1e-12);

  const auto single = cumulative_matrix(support::single_judge(2, {{0, 1, Outcome::AWins}}));
  for (double eps : {0.0, 0.5, 3.0, 100.0}) {
    CHECK(ktt_scores(single, eps, MatrixVariant::A, Direction::Win).scores == Vector((Vector(2) << 1, 0).finished()));
  }

  const auto c = cumulative_matrix(support::two_to_one());  // r = sqrt 2
  CHECK(code_of([&] { ktt_scores(c, 1.0, MatrixVariant::A, Direction::Win); }) == ErrorCode::EpsilonOutOfRange);
  CHECK(code_of([&] { ktt_scores(c, -0.1, MatrixVariant::A, Direction::Win); }) == ErrorCode::EpsilonOutOfRange);
  const auto dflt = ktt_scores(c, std::nullopt, MatrixVariant::A, Direction::Win);
  CHECK(std::get<double>(dflt.params.at("epsilon")) == doctest::Approx(0.5 / std::sqrt(2.0)));
}

TEST_CASE("ktt closed form matches its series, both variants and directions") {
  GeneratorConfig gen;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto c = cumulative_matrix(*generate_profile(gen, 22, t));
    for (auto variant : {MatrixVariant::A, MatrixVariant::C}) {
      for (auto dir : {Direction::Win, Direction::Loss}) {
        Matrix m = variant == MatrixVariant::A ? c.wins : taylor_matrix(c);
        if (dir == Direction::Loss) m.transposeInPlace();
        const double r = oracle::dense_spectral_radius(m);
        const double eps = r > 0 ? 0.5 / r : 0.5;
        CHECK(max_gap(ktt_scores(c, eps, variant, dir).scores, oracle::ktt_series(m, eps, 50)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("fair bets") {
  const auto cycle = fair_bets_scores(cumulative_matrix(support::three_cycle()), Direction::Win);
  CHECK(max_gap(cycle.scores, Vector::Constant(3, 1.0 / 3)) <= 1e-12);

  const auto c = cumulative_matrix(support::two_to_one());
  const auto w = fair_bets_scores(c, Direction::Win);
  CHECK(w[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  const auto l = fair_bets_scores(c, Direction::Loss);
  CHECK(l[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));

  CHECK(code_of([] { fair_bets_scores(cumulative_matrix(fixture("fig1").profile), Direction::Win); }) ==
        ErrorCode::NotIndivisible);
}

TEST_CASE("fair bets against arborescence counts on random indivisible profiles") {
  GeneratorConfig gen;
  gen.n_max = 5;
  gen.indivisible_only = true;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto p = generate_profile(gen, 23, t);
    if (!p) continue;
    const auto c = cumulative_matrix(*p);
    Vector ref = oracle::arborescence_weights(c.wins);
    ref /= ref.sum();
    const auto w = fair_bets_scores(c, Direction::Win);
    CHECK(max_gap(w.scores, ref) <= 1e-8);
    const Vector losses = c.wins.colwise().sum().transpose();
    CHECK((losses.asDiagonal() * w.scores - c.wins * w.scores).cwiseAbs().maxCoeff() <= 1e-10);
    Vector ref_loss = oracle::arborescence_weights(c.wins.transpose());
    ref_loss /= ref_loss.sum();
    CHECK(max_gap(fair_bets_scores(c, Direction::Loss).scores, ref_loss) <= 1e-8);
  }
}

TEST_CASE("least squares") {
  const auto s = least_squares_scores(fixture("fig1").profile);
  CHECK(max_gap(s.scores, (Vector(4) << 0.5, -0.5, 0.5, -0.5).finished()) <= 1e-9);
  CHECK(s.normalization == Normalization::SumZero);

  const auto chain = least_squares_scores(support::single_judge(3, {{0, 1, Outcome::AWins}, {1, 2, Outcome::AWins}}));
  CHECK(max_gap(chain.scores, (Vector(3) << 1, 0, -1).finished()) <= 1e-12);

  CHECK(code_of([] {
          least_squares_scores(support::single_judge(4, {{0, 1, Outcome::AWins}, {2, 3, Outcome::AWins}}));
        }) == ErrorCode::Disconnected);
  CHECK(code_of([] { least_squares_scores(support::single_judge(3, {{0, 1, Outcome::AWins}})); }) ==
        ErrorCode::IsolatedAlternative);
}

TEST_CASE("least squares solves its normal equations judge-wise") {
  GeneratorConfig gen;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto p = *generate_profile(gen, 24, t);
    ScoreVector s;
    try {
      s = least_squares_scores(p);
    } catch (const Error&) {
      continue;
    }
    // d/ds_i of sum over comparisons (r - (s_a - s_b))^2 vanishes.
    Vector grad = Vector::Zero(s.scores.size());
    for (const auto& ballot : p.judges()) {
      for (const auto& cmp : ballot) {
        const double r = cmp.value_for_a() - cmp.value_for_b();
        const double e = r - (s[cmp.a] - s[cmp.b]);
        grad(cmp.a) += e;
        grad(cmp.b) -= e;
      }
    }
    CHECK(grad.cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(std::abs(s.scores.sum()) <= 1e-10);
  }
}

TEST_CASE("generalized row sums") {
  const auto even = support::profile(2, {{{0, 1, Outcome::AWins}}, {{0, 1, Outcome::BWins}}});
  CHECK(grs_scores(even, 0.3).scores.cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(grs_scores(support::three_cycle(), 1.0).scores.cwiseAbs().maxCoeff() <= 1e-12);

  const auto p = fixture("fig1").profile;
  const auto s = grs_scores(p, 1.0 / 18);
  CHECK(s[0] > s[1]);
  CHECK(s[2] > s[3]);
  CHECK(std::get<double>(s.params.at("gamma")) == doctest::Approx(54.0));
  CHECK(scm_audit(p, s).empty());

  CHECK(code_of([&] { grs_scores(p, 1.0); }) == ErrorCode::EpsilonOutOfRange);
  CHECK(code_of([&] { grs_scores(p, 0.0); }) == ErrorCode::EpsilonOutOfRange);
  CHECK(std::isinf(grs_epsilon_bound(2, 5)));
  CHECK(grs_epsilon_bound(4, 9) == doctest::Approx(1.0 / 18));
  CHECK_NOTHROW(grs_scores(even, 50.0));
}

TEST_CASE("generalized row sums satisfy their equation judge-wise") {
  GeneratorConfig gen;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto p = *generate_profile(gen, 25, t);
    const double n = static_cast<double>(p.alternative_count()), m = static_cast<double>(p.judge_count());
    const double eps = 1.0 / (m * (n - 2));
    const double gamma = m * n + 1.0 / eps;
    const auto s = grs_scores(p, eps);
    Vector f = -s.scores;
    for (const auto& ballot : p.judges()) {
      for (const auto& cmp : ballot) {
        const double r = cmp.value_for_a() - cmp.value_for_b();
        f(cmp.a) += eps * (gamma * r - (s[cmp.a] - s[cmp.b]));
        f(cmp.b) += eps * (-gamma * r - (s[cmp.b] - s[cmp.a]));
      }
    }
    CHECK(f.cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("implicit systems on two players, two wins against one") {
  const auto p = support::two_to_one();
  const auto z = implicit_scores(zermelo_bt_system(), p);
  CHECK(z[0] == doctest::Approx(2.0 / 3).epsilon(1e-10));
  CHECK(z[0] / z[1] == doctest::Approx(2.0).epsilon(1e-10));
  const auto d = implicit_scores(daniels_system(), p);
  CHECK(d[0] / d[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  // From all-0.5 the iteration stays on s_1 + s_2 = 1, where the root is 2 - sqrt 2.
  const auto c = implicit_scores(cowden_system(), p);
  CHECK(c[0] + c[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(c[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-10));
  CHECK(c.normalization == Normalization::None);
}

TEST_CASE("implicit systems give equal scores on a symmetric profile") {
  const auto p = symmetric_profile();
  for (const auto& sys : {zermelo_bt_system(), daniels_system(), cowden_system(), grs_system(0.5)}) {
    const auto s = implicit_scores(sys, p);
    CHECK(s.scores.maxCoeff() - s.scores.minCoeff() <= 1e-10);
  }
}

TEST_CASE("implicit systems: residual, feasibility and domain on random profiles") {
  GeneratorConfig gen;
  gen.indivisible_only = true;
  for (std::uint64_t t = 0; t < 300; ++t) {
    const auto p = generate_profile(gen, 26, t);
    if (!p) continue;
    const double n = static_cast<double>(p->alternative_count()), m = static_cast<double>(p->judge_count());
    for (const auto& sys : {zermelo_bt_system(), daniels_system(), cowden_system(), grs_system(1.0 / (m * (n - 2)))}) {
      const auto s = implicit_scores(sys, *p);
      CHECK(sys.residual(*p, s.scores).cwiseAbs().maxCoeff() <= kImplicitResidualTol);
      CHECK(sys.feasible(s.scores));
      CHECK(normalization_holds(s));
    }
  }
  CHECK(code_of([] { implicit_scores(zermelo_bt_system(), fixture("fig1").profile); }) == ErrorCode::NotIndivisible);
  CHECK_NOTHROW(implicit_scores(grs_system(1.0 / 18), fixture("fig1").profile));
}

TEST_CASE("method names") {
  for (const auto& name : known_method_names()) CHECK(method_name(parse_method(name)) == name);
  const auto spec = parse_method("ktt-ratio");
  CHECK(spec.kind == MethodKind::Ktt);
  CHECK(spec.combine == CombineMode::Ratio);
  CHECK(method_name(parse_method("fair_bets-difference")) == "fair_bets-difference");
  CHECK(code_of([] { parse_method("borda"); }) == ErrorCode::UnknownMethod);
  CHECK(code_of([] { parse_method("wei-ratio"); }) == ErrorCode::UnknownMethod);

  const auto c = cumulative_matrix(support::three_cycle());
  CHECK(rate(support::three_cycle(), parse_method("ktt-difference")).scores ==
        ktt_combined(c, std::nullopt, MatrixVariant::A, CombineMode::Difference).scores);
  CHECK(rate(support::three_cycle(), parse_method("hasse")).scores == hasse_scores(c).scores);
}
