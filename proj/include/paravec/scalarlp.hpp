#pragma once

#include <vector>

#include "paravec/densela.hpp"

namespace paravec {

enum class RowKind { LessEq, Eq, GreaterEq };
enum class VarBound { NonNegative, Free };

enum class LpStatus { Optimal, Unbounded, Infeasible, Breakdown };

/// A scalar linear program: maximize objective^T x subject to the rows of
/// `a` compared against `rhs` per `row_kinds`, with per-variable bounds.
struct ScalarLp {
  RealMatrix a;                    // m x n
  std::vector<double> objective;   // n, maximized
  std::vector<double> rhs;         // m
  std::vector<RowKind> row_kinds;  // m; empty means all LessEq
  std::vector<VarBound> bounds;    // n; empty means all NonNegative

  int num_rows() const { return a.rows(); }
  int num_vars() const { return a.cols(); }
  RowKind row_kind(int i) const { return row_kinds.empty() ? RowKind::LessEq : row_kinds[i]; }
  VarBound bound(int j) const { return bounds.empty() ? VarBound::NonNegative : bounds[j]; }
};

struct LpOutcome {
  LpStatus status = LpStatus::Breakdown;
  std::vector<double> solution;         // original variables, when Optimal
  double objective_value = 0.0;         // when Optimal
  std::vector<double> certificate_ray;  // original variables, when Unbounded

  // Basis over {0..n+m-1} of the slack-augmented system [A I]x = b.
  // Populated only for LPs with all rows LessEq and all vars NonNegative
  // when no artificial variable remained basic.
  bool has_slack_basis = false;
  std::vector<int> slack_basis;
};

/// Two-phase primal simplex with Bland's smallest-index rule.
LpOutcome solve_lp(const ScalarLp& lp);

/// Phase 1 only: a primal feasible basis for the constraint system, or
/// Infeasible. Solution/slack_basis fields as in solve_lp.
LpOutcome feasible_basis(const ScalarLp& lp);

}  // namespace paravec
