#include "prefagg/confrontation.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace prefagg {

std::string_view to_string(Requirement r) noexcept {
  switch (r) {
    case Requirement::None: return "NONE";
    case Requirement::Weak: return "WEAK";
    case Requirement::Strict: return "STRICT";
  }
  return "NONE";
}

namespace {

bool dominates(const ConfrontItem& x, const ConfrontItem& y, double tol) {
  return x.outcome >= y.outcome && x.opponent_score >= y.opponent_score - tol;
}

bool strictly_dominates(const ConfrontItem& x, const ConfrontItem& y, double tol) {
  return x.outcome > y.outcome || x.opponent_score > y.opponent_score + tol;
}

bool required_on_i(const ConfrontItem& x) { return x.outcome < 1.0; }
bool required_on_j(const ConfrontItem& y) { return y.outcome > 0.0; }

/// Minimum-cost perfect assignment on a square matrix (Hungarian method with
/// potentials). Returns the column assigned to each row.
std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  const std::size_t n = cost.size();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n, 0);
  for (std::size_t j = 1; j <= n; ++j)
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace

Demand confront_multisets(std::span<const ConfrontItem> ui, std::span<const ConfrontItem> uj, double tol) {
  const std::size_t a = ui.size();
  const std::size_t b = uj.size();
  const std::size_t dim = std::max(a, b);

  // Covering a required element is worth `big`; every matched pair then costs
  // 2 and earns 1 if strict, so the secondary total plus a + b counts strict
  // pairs plus unmatched elements.
  const std::int64_t big = 4 * static_cast<std::int64_t>(a + b) + 4;
  std::vector<std::vector<std::int64_t>> weight(dim, std::vector<std::int64_t>(dim, 0));
  for (std::size_t r = 0; r < a; ++r) {
    for (std::size_t c = 0; c < b; ++c) {
      if (!dominates(ui[r], uj[c], tol)) continue;
      const std::int64_t covered = (required_on_i(ui[r]) ? 1 : 0) + (required_on_j(uj[c]) ? 1 : 0);
      const std::int64_t w = big * covered + (strictly_dominates(ui[r], uj[c], tol) ? 1 : 0) - 2;
      weight[r][c] = std::max<std::int64_t>(w, 0);
    }
  }

  std::vector<std::vector<std::int64_t>> cost(dim, std::vector<std::int64_t>(dim, 0));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) cost[r][c] = -weight[r][c];
  const auto assignment = dim ? min_cost_assignment(cost) : std::vector<std::size_t>{};

  Witness w;
  std::vector<bool> i_matched(a, false), j_matched(b, false);
  for (std::size_t r = 0; r < a; ++r) {
    const std::size_t c = assignment[r];
    if (c < b && weight[r][c] > 0) {
      w.matching.emplace_back(r, c);
      i_matched[r] = true;
      j_matched[c] = true;
    }
  }
  for (std::size_t r = 0; r < a; ++r) {
    if (i_matched[r]) continue;
    if (required_on_i(ui[r])) return {};
    w.i_extra.push_back(r);
  }
  for (std::size_t c = 0; c < b; ++c) {
    if (j_matched[c]) continue;
    if (required_on_j(uj[c])) return {};
    w.j_extra.push_back(c);
  }

  bool strict = !w.i_extra.empty() || !w.j_extra.empty();
  for (const auto& [r, c] : w.matching) strict = strict || strictly_dominates(ui[r], uj[c], tol);
  return {strict ? Requirement::Strict : Requirement::Weak, std::move(w)};
}

std::optional<Requirement> validate_witness(std::span<const ConfrontItem> ui, std::span<const ConfrontItem> uj,
                                            const Witness& witness, double tol) {
  std::vector<int> i_uses(ui.size(), 0), j_uses(uj.size(), 0);
  for (auto r : witness.i_extra) {
    if (r >= ui.size() || ui[r].outcome != 1.0) return std::nullopt;
    ++i_uses[r];
  }
  for (auto c : witness.j_extra) {
    if (c >= uj.size() || uj[c].outcome != 0.0) return std::nullopt;
    ++j_uses[c];
  }
  bool strict = !witness.i_extra.empty() || !witness.j_extra.empty();
  for (const auto& [r, c] : witness.matching) {
    if (r >= ui.size() || c >= uj.size() || !dominates(ui[r], uj[c], tol)) return std::nullopt;
    ++i_uses[r];
    ++j_uses[c];
    strict = strict || strictly_dominates(ui[r], uj[c], tol);
  }
  auto exactly_once = [](const std::vector<int>& uses) {
    return std::all_of(uses.begin(), uses.end(), [](int k) { return k == 1; });
  };
  if (!exactly_once(i_uses) || !exactly_once(j_uses)) return std::nullopt;
  return strict ? Requirement::Strict : Requirement::Weak;
}

bool requirement_met(Requirement r, double si, double sj, double tol) {
  switch (r) {
    case Requirement::None: return true;
    case Requirement::Weak: return si >= sj - tol;
    case Requirement::Strict: return si > sj + tol;
  }
  return true;
}

std::vector<ConfrontItem> confront_items(const OutcomeMultiset& u, const ScoreVector& s) {
  std::vector<ConfrontItem> items;
  items.reserve(u.elements.size());
  for (const auto& e : u.elements) items.push_back({e.outcome, s[e.opponent]});
  return items;
}

namespace {

ConfrontationVerdict confront_prepared(const ScoreVector& s, const OutcomeMultiset& ui, const OutcomeMultiset& uj) {
  ConfrontationVerdict v;
  v.i = ui.owner;
  v.j = uj.owner;
  const auto items_i = confront_items(ui, s);
  const auto items_j = confront_items(uj, s);
  auto demand = confront_multisets(items_i, items_j);
  v.requirement = demand.requirement;
  v.witness = std::move(demand.witness);
  v.satisfied = requirement_met(v.requirement, s[v.i], s[v.j]);
  v.u_i = ui;
  v.u_j = uj;
  return v;
}

}  // namespace

ConfrontationVerdict scm_confront(const Profile& profile, const ScoreVector& s, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorCode::SelfComparison, "cannot confront an alternative with itself");
  if (i >= profile.alternative_count() || j >= profile.alternative_count() ||
      s.size() != profile.alternative_count()) {
    throw Error(ErrorCode::UnknownAlternative, "confrontation index out of range");
  }
  return confront_prepared(s, outcome_multiset(profile, i), outcome_multiset(profile, j));
}

std::vector<ConfrontationVerdict> scm_audit(const Profile& profile, const ScoreVector& s) {
  const std::size_t n = profile.alternative_count();
  if (s.size() != n) throw Error(ErrorCode::UnknownAlternative, "score vector size does not match the profile");
  std::vector<OutcomeMultiset> multisets;
  multisets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) multisets.push_back(outcome_multiset(profile, i));

  std::vector<ConfrontationVerdict> violations;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Any demand is met when s_i is clearly ahead.
      if (i == j || s[i] > s[j] + kScoreTieTol) continue;
      auto v = confront_prepared(s, multisets[i], multisets[j]);
      if (!v.satisfied) violations.push_back(std::move(v));
    }
  }
  return violations;
}

}  // namespace prefagg
