#include "paravec/scalarlp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paravec {

namespace {

constexpr double kTolOpt = 1e-9;    // reduced-cost threshold for entering
constexpr double kTolPivot = 1e-9;  // ratio-test eligibility
constexpr double kTolFeas = 1e-7;   // phase-1 acceptance

// Internal standard-form tableau. Columns: variable columns (free vars
// split into +/-), then one slack per LessEq/GreaterEq row, then
// artificials. Rows are equalities with nonnegative rhs.
struct Tableau {
  int m = 0;
  int ncols = 0;        // columns excluding rhs
  int first_art = 0;    // columns >= first_art are artificial
  std::vector<double> t;  // m x (ncols+1), row-major; last col is rhs
  std::vector<int> basis;

  double& at(int r, int c) { return t[static_cast<size_t>(r) * (ncols + 1) + c]; }
  double at(int r, int c) const { return t[static_cast<size_t>(r) * (ncols + 1) + c]; }
  double& rhs(int r) { return t[static_cast<size_t>(r) * (ncols + 1) + ncols]; }
  double rhs(int r) const { return t[static_cast<size_t>(r) * (ncols + 1) + ncols]; }

  void pivot(int r, int q) {
    const double p = at(r, q);
    const double inv = 1.0 / p;
    for (int j = 0; j <= ncols; ++j) at(r, j) *= inv;
    at(r, q) = 1.0;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = at(i, q);
      if (f == 0.0) continue;
      for (int j = 0; j <= ncols; ++j) at(i, j) -= f * at(r, j);
      at(i, q) = 0.0;
    }
    basis[r] = q;
  }
};

struct ColMap {
  int var = -1;       // original variable, -1 for slack/artificial
  double sign = 1.0;  // +1 or -1 for split halves
  int slack_row = -1; // row index for slack columns
};

struct Builder {
  Tableau tab;
  std::vector<ColMap> cols;
  int n_orig = 0;
  bool slack_form = false;  // all LessEq rows, all NonNegative vars

  explicit Builder(const ScalarLp& lp) {
    const int m = lp.num_rows();
    const int n = lp.num_vars();
    n_orig = n;

    slack_form = true;
    for (int i = 0; i < m; ++i)
      if (lp.row_kind(i) != RowKind::LessEq) slack_form = false;
    for (int j = 0; j < n; ++j)
      if (lp.bound(j) != VarBound::NonNegative) slack_form = false;

    // Variable columns.
    for (int j = 0; j < n; ++j) {
      cols.push_back({j, 1.0, -1});
      if (lp.bound(j) == VarBound::Free) cols.push_back({j, -1.0, -1});
    }
    // Slack columns, one per inequality row, in row order.
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i) {
      if (lp.row_kind(i) == RowKind::Eq) continue;
      slack_col[i] = static_cast<int>(cols.size());
      cols.push_back({-1, 1.0, i});
    }
    const int base_cols = static_cast<int>(cols.size());

    // Dense rows; negate rows with negative rhs so all rhs >= 0.
    std::vector<std::vector<double>> rows(m, std::vector<double>(base_cols, 0.0));
    std::vector<double> rhs(m);
    std::vector<bool> negated(m, false);
    for (int i = 0; i < m; ++i) {
      for (int c = 0; c < base_cols; ++c) {
        if (cols[c].var >= 0)
          rows[i][c] = cols[c].sign * lp.a(i, cols[c].var);
        else if (cols[c].slack_row == i)
          rows[i][c] = lp.row_kind(i) == RowKind::LessEq ? 1.0 : -1.0;
      }
      rhs[i] = lp.rhs[i];
      if (rhs[i] < 0.0) {
        negated[i] = true;
        rhs[i] = -rhs[i];
        for (double& v : rows[i]) v = -v;
      }
    }

    // Initial basis: the row's slack when its coefficient is +1 after
    // sign normalization, otherwise a fresh artificial.
    std::vector<int> init_basis(m, -1);
    int n_art = 0;
    for (int i = 0; i < m; ++i) {
      if (slack_col[i] >= 0 && rows[i][slack_col[i]] > 0.5)
        init_basis[i] = slack_col[i];
      else
        ++n_art;
    }
    tab.m = m;
    tab.first_art = base_cols;
    tab.ncols = base_cols + n_art;
    tab.t.assign(static_cast<size_t>(m) * (tab.ncols + 1), 0.0);
    tab.basis.assign(m, -1);
    int art = base_cols;
    for (int i = 0; i < m; ++i) {
      for (int c = 0; c < base_cols; ++c) tab.at(i, c) = rows[i][c];
      tab.rhs(i) = rhs[i];
      if (init_basis[i] >= 0) {
        tab.basis[i] = init_basis[i];
      } else {
        tab.at(i, art) = 1.0;
        tab.basis[i] = art;
        ++art;
      }
    }
  }
};

// Reduced-cost row for cost vector c (length ncols) against the current
// basis, assuming the tableau is in canonical form.
std::vector<double> reduced_costs(const Tableau& tab, const std::vector<double>& cost) {
  std::vector<double> rc = cost;
  for (int r = 0; r < tab.m; ++r) {
    const double cb = cost[tab.basis[r]];
    if (cb == 0.0) continue;
    for (int j = 0; j < tab.ncols; ++j) rc[j] -= cb * tab.at(r, j);
  }
  return rc;
}

enum class PhaseResult { Optimal, Unbounded, Breakdown };

// Reduced cost of a single column against the current tableau.
double column_reduced_cost(const Tableau& tab, const std::vector<double>& cost, int q) {
  double v = cost[q];
  for (int r = 0; r < tab.m; ++r) {
    const double cb = cost[tab.basis[r]];
    if (cb != 0.0) v -= cb * tab.at(r, q);
  }
  return v;
}

// Bland-rule simplex on the tableau for the given cost row. Columns with
// banned[c] set never enter. On Unbounded, *ray_col is the entering
// column. Reduced costs are updated incrementally; both exit decisions
// are confirmed against the tableau so that accumulated drift in the
// incremental row cannot flip them.
PhaseResult run_simplex(Tableau& tab, const std::vector<double>& cost,
                        const std::vector<bool>& banned, int* ray_col) {
  std::vector<double> rc = reduced_costs(tab, cost);
  const long max_iter = 50000 + 200L * (tab.m + tab.ncols);
  bool refreshed = false;
  for (long iter = 0; iter < max_iter; ++iter) {
    int q = -1;
    for (int j = 0; j < tab.ncols; ++j) {
      if (banned[j]) continue;
      if (rc[j] > kTolOpt) {
        q = j;
        break;
      }
    }
    if (q < 0) {
      if (refreshed) return PhaseResult::Optimal;
      rc = reduced_costs(tab, cost);
      refreshed = true;
      continue;
    }

    int row = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < tab.m; ++r) {
      const double a = tab.at(r, q);
      if (a <= kTolPivot) continue;
      const double ratio = std::max(tab.rhs(r), 0.0) / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && (row < 0 || tab.basis[r] < tab.basis[row]))) {
        if (ratio < best_ratio) best_ratio = ratio;
        row = r;
      }
    }
    if (row < 0) {
      const double confirmed = column_reduced_cost(tab, cost, q);
      if (confirmed <= kTolOpt) {
        rc[q] = std::min(confirmed, 0.0);  // drift artifact, not a real ray
        continue;
      }
      if (ray_col) *ray_col = q;
      return PhaseResult::Unbounded;
    }

    refreshed = false;
    const double rcq = rc[q];
    tab.pivot(row, q);
    for (int j = 0; j < tab.ncols; ++j) rc[j] -= rcq * tab.at(row, j);
    rc[q] = 0.0;
  }
  return PhaseResult::Breakdown;
}

// Pivot artificial variables out of the basis where possible.
void drive_out_artificials(Tableau& tab) {
  for (int r = 0; r < tab.m; ++r) {
    if (tab.basis[r] < tab.first_art) continue;
    int q = -1;
    double best = kTolPivot;
    for (int j = 0; j < tab.first_art; ++j) {
      const double v = std::fabs(tab.at(r, j));
      if (v > best) {
        best = v;
        q = j;
      }
    }
    if (q >= 0) tab.pivot(r, q);
  }
}

LpOutcome extract_point(const Builder& b, const ScalarLp& lp) {
  const Tableau& tab = b.tab;
  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.solution.assign(b.n_orig, 0.0);
  for (int r = 0; r < tab.m; ++r) {
    const int c = tab.basis[r];
    if (c < static_cast<int>(b.cols.size()) && b.cols[c].var >= 0)
      out.solution[b.cols[c].var] += b.cols[c].sign * tab.rhs(r);
  }
  out.objective_value = dot(out.solution, lp.objective);

  bool art_basic = false;
  for (int r = 0; r < tab.m; ++r)
    if (tab.basis[r] >= tab.first_art) art_basic = true;
  if (b.slack_form && !art_basic) {
    out.has_slack_basis = true;
    out.slack_basis.resize(tab.m);
    for (int r = 0; r < tab.m; ++r) {
      const int c = tab.basis[r];
      out.slack_basis[r] = b.cols[c].var >= 0 ? b.cols[c].var : b.n_orig + b.cols[c].slack_row;
    }
    std::sort(out.slack_basis.begin(), out.slack_basis.end());
  }
  return out;
}

LpOutcome solve_impl(const ScalarLp& lp, bool phase1_only) {
  Builder b(lp);
  Tableau& tab = b.tab;
  const int ncols = tab.ncols;

  std::vector<bool> ban_none(ncols, false);
  std::vector<bool> ban_art(ncols, false);
  for (int j = tab.first_art; j < ncols; ++j) ban_art[j] = true;

  // Phase 1, if any artificials were needed.
  if (tab.first_art < ncols) {
    std::vector<double> cost(ncols, 0.0);
    for (int j = tab.first_art; j < ncols; ++j) cost[j] = -1.0;
    const PhaseResult pr = run_simplex(tab, cost, ban_none, nullptr);
    if (pr != PhaseResult::Optimal) {
      LpOutcome out;
      out.status = LpStatus::Breakdown;
      return out;
    }
    double infeas = 0.0;
    for (int r = 0; r < tab.m; ++r)
      if (tab.basis[r] >= tab.first_art) infeas += tab.rhs(r);
    double scale = 1.0 + inf_norm(lp.rhs);
    if (infeas > kTolFeas * scale) {
      LpOutcome out;
      out.status = LpStatus::Infeasible;
      return out;
    }
    drive_out_artificials(tab);
  }

  if (phase1_only) return extract_point(b, lp);

  // Phase 2.
  std::vector<double> cost(ncols, 0.0);
  for (size_t c = 0; c < b.cols.size(); ++c)
    if (b.cols[c].var >= 0) cost[c] = b.cols[c].sign * lp.objective[b.cols[c].var];
  int ray_col = -1;
  const PhaseResult pr = run_simplex(tab, cost, ban_art, &ray_col);

  if (pr == PhaseResult::Breakdown) {
    LpOutcome out;
    out.status = LpStatus::Breakdown;
    return out;
  }
  if (pr == PhaseResult::Unbounded) {
    LpOutcome out;
    out.status = LpStatus::Unbounded;
    out.certificate_ray.assign(b.n_orig, 0.0);
    if (b.cols[ray_col].var >= 0)
      out.certificate_ray[b.cols[ray_col].var] += b.cols[ray_col].sign;
    for (int r = 0; r < tab.m; ++r) {
      const int c = tab.basis[r];
      if (c >= tab.first_art) {
        if (std::fabs(tab.at(r, ray_col)) > kTolPivot) {
          out.status = LpStatus::Breakdown;  // ray leans on an artificial
          return out;
        }
        continue;
      }
      if (b.cols[c].var >= 0)
        out.certificate_ray[b.cols[c].var] -= b.cols[c].sign * tab.at(r, ray_col);
    }
    return out;
  }
  return extract_point(b, lp);
}

}  // namespace

LpOutcome solve_lp(const ScalarLp& lp) { return solve_impl(lp, false); }

LpOutcome feasible_basis(const ScalarLp& lp) { return solve_impl(lp, true); }

}  // namespace paravec
