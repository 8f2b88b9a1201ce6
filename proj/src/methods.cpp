#include "prefagg/methods.hpp"

#include <string>

#include "prefagg/implicit.hpp"

namespace prefagg {

namespace {

struct NamedKind {
  std::string_view name;
  MethodKind kind;
};

constexpr NamedKind kKinds[] = {
    {"row_sum", MethodKind::RowSum},
    {"wei", MethodKind::Wei},
    {"hasse", MethodKind::Hasse},
    {"ramanujacharyulu", MethodKind::Ramanujacharyulu},
    {"ktt", MethodKind::Ktt},
    {"fair_bets", MethodKind::FairBets},
    {"least_squares", MethodKind::LeastSquares},
    {"grs", MethodKind::Grs},
    {"zermelo_bt", MethodKind::ZermeloBt},
    {"daniels", MethodKind::Daniels},
    {"cowden", MethodKind::Cowden},
};

std::string_view kind_name(MethodKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "unknown";
}

}  // namespace

MethodSpec parse_method(std::string_view name) {
  MethodSpec spec;
  std::string_view base = name;
  if (auto dash = name.find('-'); dash != std::string_view::npos) {
    base = name.substr(0, dash);
    const auto suffix = name.substr(dash + 1);
    if (suffix == "difference") spec.combine = CombineMode::Difference;
    else if (suffix == "ratio") spec.combine = CombineMode::Ratio;
    else throw Error(ErrorCode::UnknownMethod, "unknown method '" + std::string(name) + "'");
    if (base != "ktt" && base != "fair_bets") {
      throw Error(ErrorCode::UnknownMethod, "only ktt and fair_bets take a combine suffix");
    }
  }
  for (const auto& k : kKinds) {
    if (k.name == base) {
      spec.kind = k.kind;
      return spec;
    }
  }
  throw Error(ErrorCode::UnknownMethod, "unknown method '" + std::string(name) + "'");
}

std::string method_name(const MethodSpec& spec) {
  std::string out(kind_name(spec.kind));
  if (spec.combine && (spec.kind == MethodKind::Ktt || spec.kind == MethodKind::FairBets)) {
    out += "-";
    out += to_string(*spec.combine);
  }
  return out;
}

const std::vector<std::string>& known_method_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& k : kKinds) v.emplace_back(k.name);
    for (const char* extra : {"ktt-difference", "ktt-ratio", "fair_bets-difference", "fair_bets-ratio"}) {
      v.emplace_back(extra);
    }
    return v;
  }();
  return names;
}

ScoreVector rate(const Profile& profile, const MethodSpec& spec) {
  ScoreVector out;
  switch (spec.kind) {
    case MethodKind::RowSum: out = row_sum_scores(profile); break;
    case MethodKind::Wei: out = wei_scores(cumulative_matrix(profile), spec.direction).scores; break;
    case MethodKind::Hasse: out = hasse_scores(cumulative_matrix(profile)); break;
    case MethodKind::Ramanujacharyulu: out = ramanujacharyulu_scores(cumulative_matrix(profile)); break;
    case MethodKind::Ktt: {
      const auto c = cumulative_matrix(profile);
      out = spec.combine ? ktt_combined(c, spec.epsilon, spec.variant, *spec.combine)
                         : ktt_scores(c, spec.epsilon, spec.variant, spec.direction);
      break;
    }
    case MethodKind::FairBets: {
      const auto c = cumulative_matrix(profile);
      out = spec.combine ? fair_bets_combined(c, *spec.combine) : fair_bets_scores(c, spec.direction);
      break;
    }
    case MethodKind::LeastSquares: out = least_squares_scores(profile); break;
    case MethodKind::Grs: {
      const double eps = spec.epsilon ? *spec.epsilon
                                      : grs_default_epsilon(profile.alternative_count(), profile.judge_count());
      out = grs_scores(profile, eps);
      break;
    }
    case MethodKind::ZermeloBt: out = implicit_scores(zermelo_bt_system(), profile); break;
    case MethodKind::Daniels: out = implicit_scores(daniels_system(), profile); break;
    case MethodKind::Cowden: out = implicit_scores(cowden_system(), profile); break;
  }
  out.method = method_name(spec);
  return out;
}

}  // namespace prefagg
