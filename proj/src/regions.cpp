#include "paravec/regions.hpp"

#include <algorithm>
#include <cmath>

#include "paravec/scalarlp.hpp"

namespace paravec {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::optional<std::vector<double>> witness_impl(const std::vector<HalfspaceLambda>& weak,
                                                const std::vector<HalfspaceLambda>& strict,
                                                int lambda_dim, double tol) {
  const int n = lambda_dim + 1;  // lambda coordinates plus the slack s
  const int s_col = lambda_dim;
  const int m = static_cast<int>(weak.size() + strict.size()) + 1;

  ScalarLp lp;
  lp.a = RealMatrix(m, n);
  lp.rhs.assign(m, 0.0);
  lp.row_kinds.assign(m, RowKind::GreaterEq);
  lp.bounds.assign(n, VarBound::Free);
  lp.bounds[s_col] = VarBound::NonNegative;
  lp.objective.assign(n, 0.0);
  lp.objective[s_col] = 1.0;

  int row = 0;
  auto add = [&](const HalfspaceLambda& h, bool with_slack) {
    for (int k = 0; k < lambda_dim; ++k) lp.a(row, k) = h.normal[k];
    if (with_slack) lp.a(row, s_col) = -norm2(h.normal);
    lp.rhs[row] = -h.offset;
    ++row;
  };
  for (const auto& h : weak) add(h, false);
  for (const auto& h : strict) add(h, true);
  lp.row_kinds[row] = RowKind::LessEq;  // s <= 1 keeps the LP bounded
  lp.a(row, s_col) = 1.0;
  lp.rhs[row] = 1.0;

  const LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::Optimal) return std::nullopt;
  if (out.objective_value <= tol) return std::nullopt;
  return std::vector<double>(out.solution.begin(), out.solution.begin() + lambda_dim);
}

}  // namespace

std::optional<std::vector<double>> region_interior_witness(
    const std::vector<HalfspaceLambda>& halfspaces, int lambda_dim, const Tolerances& tol) {
  return witness_impl({}, halfspaces, lambda_dim, tol.defining);
}

std::optional<std::vector<double>> interior_witness_mixed(
    const std::vector<HalfspaceLambda>& weak, const std::vector<HalfspaceLambda>& strict,
    int lambda_dim, const Tolerances& tol) {
  return witness_impl(weak, strict, lambda_dim, tol.defining);
}

DefiningSetResult defining_set(const Dictionary& d, const ParamMap& pm, const Tolerances& tol) {
  const int dim = pm.lambda_dim();
  DefiningSetResult res;

  std::vector<int> order = d.nonbasis;
  std::sort(order.begin(), order.end(), std::greater<int>());

  std::vector<bool> redundant_flag(d.nonbasis.size(), false);
  std::vector<HalfspaceLambda> hs;
  hs.reserve(d.nonbasis.size());
  for (int j : d.nonbasis) hs.push_back(optimality_halfspace(d, j, pm));

  for (int j : order) {
    const int jpos = d.nonbasis_pos(j);
    const HalfspaceLambda& target = hs[jpos];

    // Maximize the violation -(normal^T lambda + offset) over the other
    // inequalities and Lambda.
    std::vector<const HalfspaceLambda*> rows;
    for (size_t k = 0; k < hs.size(); ++k) {
      if (static_cast<int>(k) == jpos || redundant_flag[k]) continue;
      rows.push_back(&hs[k]);
    }
    for (const auto& h : pm.cone_halfspaces) rows.push_back(&h);

    ScalarLp lp;
    const int m = static_cast<int>(rows.size());
    lp.a = RealMatrix(m, dim);
    lp.rhs.assign(m, 0.0);
    lp.row_kinds.assign(m, RowKind::GreaterEq);
    lp.bounds.assign(dim, VarBound::Free);
    lp.objective.assign(dim, 0.0);
    for (int k = 0; k < dim; ++k) lp.objective[k] = -target.normal[k];
    for (int r = 0; r < m; ++r) {
      for (int k = 0; k < dim; ++k) lp.a(r, k) = rows[r]->normal[k];
      lp.rhs[r] = -rows[r]->offset;
    }

    const LpOutcome out = solve_lp(lp);
    bool is_defining;
    if (out.status == LpStatus::Unbounded) {
      is_defining = true;
    } else if (out.status == LpStatus::Optimal) {
      is_defining = (out.objective_value - target.offset) > tol.defining;
    } else {
      // Infeasible constraint set: the region itself is empty.
      res.region_empty_interior = true;
      is_defining = false;
    }
    if (is_defining)
      res.defining.push_back(j);
    else
      redundant_flag[jpos] = true;
  }

  for (size_t k = 0; k < redundant_flag.size(); ++k)
    if (redundant_flag[k]) res.redundant.push_back(d.nonbasis[k]);
  std::sort(res.defining.begin(), res.defining.end());

  if (!res.region_empty_interior) {
    const auto w = interior_witness_mixed(hs, pm.cone_halfspaces, dim, tol);
    if (!w) res.region_empty_interior = true;
  }
  return res;
}

}  // namespace paravec
