#include "prefagg/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefagg/axioms.hpp"
#include "prefagg/document.hpp"
#include "prefagg/fixtures.hpp"
#include "prefagg/methods.hpp"
#include "prefagg/report.hpp"

namespace prefagg {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotIndivisible:
    case ErrorCode::Disconnected:
    case ErrorCode::IsolatedAlternative:
    case ErrorCode::EpsilonOutOfRange:
    case ErrorCode::DivideByZero:
    case ErrorCode::Singular:
    case ErrorCode::TooLarge:
    case ErrorCode::NotAMacrovertex:
    case ErrorCode::InvalidPerturbation:
      return kExitInapplicable;
    case ErrorCode::NoConvergence:
    case ErrorCode::DomainExit:
      return kExitNoConvergence;
    default:
      return kExitInvalidInput;
  }
}

namespace {

struct MethodArgs {
  std::string name;
  std::optional<double> epsilon;
  std::string variant;
  std::string direction;
  std::string combine;
};

void add_method_options(CLI::App* cmd, MethodArgs& m, bool required) {
  auto* opt = cmd->add_option("--method", m.name, "scoring procedure");
  if (required) opt->required();
  cmd->add_option("--epsilon", m.epsilon, "ktt or grs parameter");
  cmd->add_option("--variant", m.variant, "ktt matrix: A or C");
  cmd->add_option("--direction", m.direction, "win or loss");
  cmd->add_option("--combine", m.combine, "ktt/fair_bets: difference or ratio");
}

MethodSpec build_spec(const MethodArgs& m) {
  MethodSpec spec = parse_method(m.name);
  if (m.epsilon) spec.epsilon = *m.epsilon;
  if (!m.variant.empty()) {
    if (m.variant == "A" || m.variant == "a") {
      spec.variant = MatrixVariant::A;
    } else if (m.variant == "C" || m.variant == "c") {
      spec.variant = MatrixVariant::C;
    } else {
      throw Error(ErrorCode::UnknownMethod, "--variant must be A or C");
    }
  }
  if (!m.direction.empty()) {
    if (m.direction == "win") {
      spec.direction = Direction::Win;
    } else if (m.direction == "loss") {
      spec.direction = Direction::Loss;
    } else {
      throw Error(ErrorCode::UnknownMethod, "--direction must be win or loss");
    }
  }
  if (!m.combine.empty()) {
    if (spec.kind != MethodKind::Ktt && spec.kind != MethodKind::FairBets) {
      throw Error(ErrorCode::UnknownMethod, "--combine applies to ktt and fair_bets only");
    }
    if (m.combine == "difference") {
      spec.combine = CombineMode::Difference;
    } else if (m.combine == "ratio") {
      spec.combine = CombineMode::Ratio;
    } else {
      throw Error(ErrorCode::UnknownMethod, "--combine must be difference or ratio");
    }
  }
  return spec;
}

void emit(const nlohmann::json& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-" || path == "stdout") {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidDocument, "cannot write '" + path + "'");
  file << doc.dump(2) << '\n';
}

void report_error(std::ostream& err, const std::string& code, const std::string& message, int exit_code) {
  err << nlohmann::json{{"error", code}, {"message", message}, {"exit_code", exit_code}}.dump() << '\n';
}

// --- reproduce --------------------------------------------------------------

class Checklist {
 public:
  Checklist(std::ostream& out, std::string target) : out_(out), target_(std::move(target)) {}

  void check(bool ok, const std::string& what) {
    out_ << (ok ? "PASS " : "FAIL ") << target_ << ": " << what << '\n';
    all_ = all_ && ok;
  }
  bool all() const { return all_; }

 private:
  std::ostream& out_;
  std::string target_;
  bool all_ = true;
};

bool flags_pair(const std::vector<ConfrontationVerdict>& vs, std::size_t i, std::size_t j,
                std::optional<Requirement> req = std::nullopt) {
  for (const auto& v : vs) {
    if (v.i == i && v.j == j && (!req || v.requirement == *req)) return true;
  }
  return false;
}

// Runs a check, turning a library error into a FAIL line.
void guarded(Checklist& list, const std::string& what, const std::function<bool()>& body) {
  try {
    list.check(body(), what);
  } catch (const Error& e) {
    list.check(false, what + " (" + std::string(error_name(e.code())) + ": " + e.what() + ")");
  }
}

bool reproduce_fig1(std::ostream& out) {
  Checklist list(out, "fig1");
  const auto f = fixture("fig1");
  guarded(list, "row-sum scores (4.5, 1.5, 1.5, 1.5)", [&] {
    const auto s = row_sum_scores(f.profile);
    return s.scores == (Vector(4) << 4.5, 1.5, 1.5, 1.5).finished();
  });
  guarded(list, "row-sum audit flags (3,4) STRICT", [&] {
    return flags_pair(scm_audit(f.profile, row_sum_scores(f.profile)), 2, 3, Requirement::Strict);
  });
  guarded(list, "grs audit clean at epsilon 1/18", [&] {
    return scm_audit(f.profile, grs_scores(f.profile, 1.0 / 18.0)).empty();
  });
  guarded(list, "least-squares audit flags (1,3)", [&] {
    return flags_pair(scm_audit(f.profile, least_squares_scores(f.profile)), 0, 2);
  });
  return list.all();
}

bool reproduce_fig2(std::ostream& out) {
  Checklist list(out, "fig2");
  const auto f = fixture("fig2_scenario");
  guarded(list, "confrontation of (i,j) demands STRICT under the preconceptions", [&] {
    const auto [i, j] = *f.focus_pair;
    return scm_confront(f.profile, *f.preset_scores, i, j).requirement == Requirement::Strict;
  });
  return list.all();
}

bool reproduce_prop2(std::ostream& out) {
  Checklist list(out, "prop2");
  const auto f = fixture("prop2");
  guarded(list, "wei WIN gives |s_2 - s_3| <= 1e-9", [&] {
    const auto s = wei_scores(cumulative_matrix(f.profile), Direction::Win).scores;
    return std::abs(s[1] - s[2]) <= 1e-9;
  });
  guarded(list, "wei audit flags (2,3)", [&] {
    const auto s = wei_scores(cumulative_matrix(f.profile), Direction::Win).scores;
    return flags_pair(scm_audit(f.profile, s), 1, 2);
  });
  return list.all();
}

bool reproduce_prop10(std::ostream& out) {
  Checklist list(out, "prop10");
  const auto f = fixture("prop10");
  guarded(list, "least squares flags a pair whose winner has extra wins", [&] {
    for (const auto& v : scm_audit(f.profile, least_squares_scores(f.profile))) {
      if (has_extra_wins_over(f.profile, v.i, v.j)) return true;
    }
    return false;
  });
  guarded(list, "seeded search reproduces the frozen profile", [&] {
    const auto found = search_least_squares_extra_win(kProp10Seed, kProp10Budget);
    return found && profile_to_json(*found) == profile_to_json(f.profile);
  });
  return list.all();
}

int run_reproduce(const std::string& target, std::ostream& out) {
  bool ok = true;
  if (target == "fig1" || target == "all") ok = reproduce_fig1(out) && ok;
  if (target == "fig2" || target == "all") ok = reproduce_fig2(out) && ok;
  if (target == "prop2" || target == "all") ok = reproduce_prop2(out) && ok;
  if (target == "prop10" || target == "all") ok = reproduce_prop10(out) && ok;
  return ok ? kExitOk : kExitReproduceFail;
}

std::optional<MacrovertexReading> parse_reading(const std::string& s) {
  if (s == "shared") return MacrovertexReading::SharedOutsideCounts;
  if (s == "as_printed") return MacrovertexReading::AsPrinted;
  return std::nullopt;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ratings from incomplete paired comparisons, with axiom audits", "prefagg"};
  app.require_subcommand(1);

  // rate
  MethodArgs rate_method;
  std::string rate_input, rate_output;
  auto* rate_cmd = app.add_subcommand("rate", "score a profile document");
  rate_cmd->add_option("--input", rate_input, "profile document (JSON or .csv)")->required();
  add_method_options(rate_cmd, rate_method, true);
  rate_cmd->add_option("--output", rate_output, "report file (default stdout)");

  // audit
  MethodArgs audit_method;
  std::string audit_input, audit_output, audit_reading = "shared";
  bool audit_splitting = false, audit_macro = false;
  std::size_t audit_perturbations = 20;
  std::uint64_t audit_seed = 42;
  auto* audit = app.add_subcommand("audit", "check scores against the monotonicity axiom");
  audit->add_option("--input", audit_input, "profile document (JSON or .csv)")->required();
  add_method_options(audit, audit_method, true);
  audit->add_flag("--splitting-balance", audit_splitting, "also run the splitting balance check");
  audit->add_flag("--macrovertex", audit_macro, "also test independence of every macrovertex");
  audit->add_option("--perturbations", audit_perturbations, "perturbations per macrovertex");
  audit->add_option("--seed", audit_seed, "seed for macrovertex perturbations");
  audit->add_option("--reading", audit_reading, "macrovertex condition: shared or as_printed");
  audit->add_option("--output", audit_output, "report file (default stdout)");

  // search
  MethodArgs search_method;
  std::uint64_t search_seed = 42;
  long long search_budget = 10000;
  long long search_workers = 1;
  GeneratorConfig gen;
  auto* search = app.add_subcommand("search", "seeded search for an axiom violation");
  add_method_options(search, search_method, true);
  search->add_option("--seed", search_seed, "master seed");
  search->add_option("--budget", search_budget, "number of trials");
  search->add_option("--n-min", gen.n_min, "fewest alternatives");
  search->add_option("--n-max", gen.n_max, "most alternatives");
  search->add_option("--m-min", gen.m_min, "fewest judges");
  search->add_option("--m-max", gen.m_max, "most judges");
  search->add_flag("--indivisible-only", gen.indivisible_only, "reject divisible profiles");
  search->add_option("--draw-prob", gen.draw_prob, "chance a comparison is a draw");
  search->add_option("--pair-prob", gen.pair_prob, "chance a judge compares a given pair");
  search->add_option("--workers", search_workers, "worker threads");

  // reproduce
  std::string reproduce_target;
  auto* reproduce = app.add_subcommand("reproduce", "re-run the canned fixtures and check their documented outcomes");
  reproduce->add_option("target", reproduce_target, "fig1, fig2, prop2, prop10 or all")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "prop2", "prop10", "all"}));

  // fixture
  std::string fixture_name, fixture_output;
  auto* fixture_cmd = app.add_subcommand("fixture", "export a canned profile document");
  fixture_cmd->add_option("name", fixture_name, "fixture name")->required();
  fixture_cmd->add_option("--output", fixture_output, "document file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.back()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "INVALID_ARGUMENTS", e.what(), kExitInvalidInput);
    return kExitInvalidInput;
  }

  try {
    if (rate_cmd->parsed()) {
      const auto spec = build_spec(rate_method);
      const auto profile = load_profile(rate_input);
      emit(score_report(profile, rate(profile, spec)), rate_output, out);
      return kExitOk;
    }

    if (audit->parsed()) {
      const auto spec = build_spec(audit_method);
      const auto reading = parse_reading(audit_reading);
      if (!reading) throw Error(ErrorCode::InvalidDocument, "--reading must be shared or as_printed");
      const auto profile = load_profile(audit_input);
      const auto scores = rate(profile, spec);
      const auto violations = scm_audit(profile, scores);

      nlohmann::json report;
      report["scores"] = score_report(profile, scores);
      nlohmann::json list = nlohmann::json::array();
      for (const auto& v : violations) list.push_back(verdict_json(profile, v));
      report["scm"]["violations"] = std::move(list);
      report["scm"]["count"] = violations.size();
      bool clean = violations.empty();

      if (audit_splitting) {
        const auto split = splitting_balance_check(profile, scores);
        report["splitting_balance"] = splitting_json(profile, split);
        clean = clean && split.pass;
      }
      if (audit_macro) {
        nlohmann::json results = nlohmann::json::array();
        for (const auto& members : enumerate_macrovertices(profile, *reading)) {
          const auto v = macrovertex_independence_test(spec, profile, members, audit_perturbations, audit_seed);
          results.push_back(independence_json(profile, members, v));
          clean = clean && v.independent;
        }
        report["macrovertices"] = std::move(results);
      }
      emit(report, audit_output, out);
      return clean ? kExitOk : kExitViolation;
    }

    if (search->parsed()) {
      if (search_budget < 0) throw Error(ErrorCode::InvalidDocument, "--budget must be >= 0");
      if (search_workers < 1) throw Error(ErrorCode::InvalidDocument, "--workers must be >= 1");
      if (gen.n_min < 1 || gen.n_min > gen.n_max || gen.m_min < 1 || gen.m_min > gen.m_max) {
        throw Error(ErrorCode::InvalidDocument, "size ranges need 1 <= min <= max");
      }
      if (!(gen.draw_prob >= 0.0 && gen.draw_prob <= 1.0 && gen.pair_prob >= 0.0 && gen.pair_prob <= 1.0)) {
        throw Error(ErrorCode::InvalidDocument, "probabilities must lie in [0, 1]");
      }
      const auto spec = build_spec(search_method);
      const auto result = scm_violation_search(spec, gen, search_seed, static_cast<std::size_t>(search_budget),
                                               static_cast<std::size_t>(search_workers));
      nlohmann::json report;
      if (result.report) {
        report = counterexample_json(*result.report);
        report["reverified"] = reverify(*result.report);
      } else {
        report["message"] = "no violation in " + std::to_string(result.trials) + " trials";
      }
      report["trials"] = result.trials;
      report["skipped"] = result.skipped;
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (reproduce->parsed()) return run_reproduce(reproduce_target, out);

    if (fixture_cmd->parsed()) {
      emit(profile_to_json(fixture(fixture_name).profile), fixture_output, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    report_error(err, std::string(error_name(e.code())), e.what(), code);
    return code;
  }
  return kExitInvalidInput;
}

}  // namespace prefagg
