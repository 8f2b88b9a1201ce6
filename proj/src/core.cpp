#include "prefagg/core.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

namespace prefagg {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfComparison: return "SELF_COMPARISON";
    case ErrorCode::DuplicatePair: return "DUPLICATE_PAIR";
    case ErrorCode::UnknownAlternative: return "UNKNOWN_ALTERNATIVE";
    case ErrorCode::Empty: return "EMPTY";
    case ErrorCode::InvalidDocument: return "INVALID_DOCUMENT";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::DomainExit: return "DOMAIN_EXIT";
    case ErrorCode::NotIndivisible: return "NOT_INDIVISIBLE";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::IsolatedAlternative: return "ISOLATED_ALTERNATIVE";
    case ErrorCode::EpsilonOutOfRange: return "EPSILON_OUT_OF_RANGE";
    case ErrorCode::DivideByZero: return "DIVIDE_BY_ZERO";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::NotAMacrovertex: return "NOT_A_MACROVERTEX";
    case ErrorCode::InvalidPerturbation: return "INVALID_PERTURBATION";
    case ErrorCode::UnknownFixture: return "UNKNOWN_FIXTURE";
    case ErrorCode::UnknownMethod: return "UNKNOWN_METHOD";
  }
  return "UNKNOWN";
}

double Comparison::value_for_a() const noexcept {
  switch (outcome) {
    case Outcome::AWins: return 1.0;
    case Outcome::BWins: return 0.0;
    case Outcome::Draw: return 0.5;
  }
  return 0.5;
}

Profile::Profile(std::vector<std::string> alternatives, std::vector<Ballot> judges)
    : alternatives_(std::move(alternatives)), judges_(std::move(judges)) {
  const std::size_t n = alternatives_.size();
  if (n == 0) throw Error(ErrorCode::Empty, "profile has no alternatives");
  if (judges_.empty()) throw Error(ErrorCode::Empty, "profile has no judges");

  std::set<std::string> seen(alternatives_.begin(), alternatives_.end());
  if (seen.size() != n) throw Error(ErrorCode::InvalidDocument, "alternative labels are not distinct");

  for (std::size_t p = 0; p < judges_.size(); ++p) {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& cmp : judges_[p]) {
      if (cmp.a >= n || cmp.b >= n) {
        throw Error(ErrorCode::UnknownAlternative,
                    "judge " + std::to_string(p) + " references an alternative index out of range");
      }
      if (cmp.a == cmp.b) {
        throw Error(ErrorCode::SelfComparison,
                    "judge " + std::to_string(p) + " compares '" + alternatives_[cmp.a] + "' with itself");
      }
      auto key = std::minmax(cmp.a, cmp.b);
      if (!pairs.insert(key).second) {
        throw Error(ErrorCode::DuplicatePair, "judge " + std::to_string(p) + " answers the pair ('" +
                                                  alternatives_[key.first] + "', '" +
                                                  alternatives_[key.second] + "') more than once");
      }
    }
  }
}

std::optional<std::size_t> Profile::index_of(const std::string& label) const {
  auto it = std::find(alternatives_.begin(), alternatives_.end(), label);
  if (it == alternatives_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alternatives_.begin());
}

std::size_t Profile::comparison_count() const noexcept {
  std::size_t total = 0;
  for (const auto& ballot : judges_) total += ballot.size();
  return total;
}

Profile validate_profile(const RawProfile& raw) {
  if (raw.alternatives.empty()) throw Error(ErrorCode::Empty, "profile has no alternatives");
  if (raw.judges.empty()) throw Error(ErrorCode::Empty, "profile has no judges");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < raw.alternatives.size(); ++i) {
    if (!index.emplace(raw.alternatives[i], i).second) {
      throw Error(ErrorCode::InvalidDocument, "duplicate alternative label '" + raw.alternatives[i] + "'");
    }
  }
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error(ErrorCode::UnknownAlternative, "unknown alternative '" + label + "'");
    return it->second;
  };

  std::vector<Ballot> judges;
  judges.reserve(raw.judges.size());
  for (const auto& raw_ballot : raw.judges) {
    Ballot ballot;
    ballot.reserve(raw_ballot.size());
    for (const auto& rc : raw_ballot) ballot.push_back({lookup(rc.a), lookup(rc.b), rc.outcome});
    judges.push_back(std::move(ballot));
  }
  return Profile(raw.alternatives, std::move(judges));
}

CumulativeMatrix CumulativeMatrix::from_outcomes(const Matrix& wins) {
  if (wins.rows() != wins.cols() || wins.rows() == 0) {
    throw Error(ErrorCode::InvalidDocument, "outcome matrix must be square and nonempty");
  }
  for (Eigen::Index i = 0; i < wins.rows(); ++i) {
    if (wins(i, i) != 0.0) throw Error(ErrorCode::SelfComparison, "outcome matrix has a nonzero diagonal");
    for (Eigen::Index j = 0; j < wins.cols(); ++j) {
      if (!(wins(i, j) >= 0.0)) throw Error(ErrorCode::InvalidDocument, "outcome matrix has a negative entry");
    }
  }
  CumulativeMatrix c;
  c.wins = wins;
  c.counts = wins + wins.transpose();
  c.skew = wins - wins.transpose();
  return c;
}

CumulativeMatrix cumulative_matrix(const Profile& profile) {
  const auto n = static_cast<Eigen::Index>(profile.alternative_count());
  Matrix wins = Matrix::Zero(n, n);
  for (const auto& ballot : profile.judges()) {
    for (const auto& cmp : ballot) {
      wins(cmp.a, cmp.b) += cmp.value_for_a();
      wins(cmp.b, cmp.a) += cmp.value_for_b();
    }
  }
  return CumulativeMatrix::from_outcomes(wins);
}

DegreeSummary degree_summary(const CumulativeMatrix& c) {
  return {c.wins.rowwise().sum(), c.wins.colwise().sum().transpose(), c.counts.rowwise().sum()};
}

namespace {

std::vector<bool> reachable(const Matrix& m, std::size_t start, bool reverse) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      const double arc = reverse ? m(w, v) : m(v, w);
      if (arc > 0.0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

Split split_from_mask(const std::vector<bool>& in_second) {
  Split s;
  for (std::size_t i = 0; i < in_second.size(); ++i) (in_second[i] ? s.second : s.first).push_back(i);
  return s;
}

}  // namespace

std::optional<Split> divisible_split(const CumulativeMatrix& c) {
  const std::size_t n = c.size();
  if (n <= 1) return std::nullopt;
  // Everything reachable from 0 never scores against the rest.
  auto fwd = reachable(c.wins, 0, false);
  if (std::find(fwd.begin(), fwd.end(), false) != fwd.end()) return split_from_mask(fwd);
  // Nothing outside the set reaching 0 scores against it.
  auto back = reachable(c.wins, 0, true);
  if (std::find(back.begin(), back.end(), false) != back.end()) {
    std::vector<bool> second(n);
    for (std::size_t i = 0; i < n; ++i) second[i] = !back[i];
    return split_from_mask(second);
  }
  return std::nullopt;
}

bool is_indivisible(const CumulativeMatrix& c) { return !divisible_split(c).has_value(); }

bool verify_split(const CumulativeMatrix& c, const Split& split) {
  if (split.first.empty() || split.second.empty()) return false;
  for (auto j : split.second)
    for (auto i : split.first)
      if (c.wins(j, i) > 0.0) return false;
  return true;
}

bool is_connected(const Profile& profile) {
  const auto n = profile.alternative_count();
  Matrix adjacency = Matrix::Zero(n, n);
  for (const auto& ballot : profile.judges()) {
    for (const auto& cmp : ballot) {
      adjacency(cmp.a, cmp.b) = 1.0;
      adjacency(cmp.b, cmp.a) = 1.0;
    }
  }
  auto seen = reachable(adjacency, 0, false);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::vector<std::size_t>> strong_components(const Matrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<bool>> fwd(n), back(n);
  for (std::size_t v = 0; v < n; ++v) {
    fwd[v] = reachable(m, v, false);
    back[v] = reachable(m, v, true);
  }
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t w = 0; w < n; ++w) {
      if (fwd[v][w] && back[v][w]) {
        comp.push_back(w);
        assigned[w] = true;
      }
    }
    components.push_back(std::move(comp));
  }
  return components;
}

OutcomeMultiset outcome_multiset(const Profile& profile, std::size_t i) {
  OutcomeMultiset u{i, {}};
  for (std::size_t p = 0; p < profile.judge_count(); ++p) {
    for (const auto& cmp : profile.judges()[p]) {
      if (cmp.a == i) u.elements.push_back({cmp.value_for_a(), cmp.b, p});
      else if (cmp.b == i) u.elements.push_back({cmp.value_for_b(), cmp.a, p});
    }
  }
  return u;
}

Profile permute_alternatives(const Profile& profile, std::span<const std::size_t> perm) {
  const std::size_t n = profile.alternative_count();
  if (perm.size() != n) throw Error(ErrorCode::InvalidDocument, "permutation size mismatch");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels.at(perm[i]) = profile.label(i);
  std::vector<Ballot> judges;
  for (const auto& ballot : profile.judges()) {
    Ballot b;
    for (const auto& cmp : ballot) b.push_back({perm[cmp.a], perm[cmp.b], cmp.outcome});
    judges.push_back(std::move(b));
  }
  return Profile(std::move(labels), std::move(judges));
}

Profile permute_judges(const Profile& profile, std::span<const std::size_t> order) {
  if (order.size() != profile.judge_count()) throw Error(ErrorCode::InvalidDocument, "judge order size mismatch");
  std::vector<Ballot> judges;
  for (auto p : order) judges.push_back(profile.judges().at(p));
  return Profile(profile.alternatives(), std::move(judges));
}

}  // namespace prefagg
