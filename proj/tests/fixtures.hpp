#pragma once

#include <vector>

#include "paravec/model.hpp"

namespace fixtures {

using paravec::Problem;
using paravec::RealMatrix;

// maximize (x1, x2 - x3, x3) wrt R^3_+
// s.t. x1 + x2 <= 5, x1 + 2 x2 - x3 <= 9, x >= 0
inline Problem ex51() {
  Problem p;
  p.objective = RealMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, -1, 1}});
  p.constraint_matrix = RealMatrix::from_rows({{1, 1, 0}, {1, 2, -1}});
  p.rhs = {5, 9};
  p.cone.generators = RealMatrix::identity(3);
  p.interior_point = {1, 1, 1};
  return p;
}

// maximize (x1 - x2, x3 - x4) wrt R^2_+, s.t. x1 - x2 + x3 - x4 <= 1
inline Problem ex52() {
  Problem p;
  p.objective = RealMatrix::from_rows({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  p.constraint_matrix = RealMatrix::from_rows({{1, -1, 1, -1}});
  p.rhs = {1};
  p.cone.generators = RealMatrix::identity(2);
  p.interior_point = {1, 1};
  return p;
}

// maximize (3x1 + x2, 3x1 - x2) wrt R^2_+
// s.t. x1 + x2 <= 4, x1 - x2 <= 4, x3 <= 4
inline Problem ex61() {
  Problem p;
  p.objective = RealMatrix::from_rows({{3, 3}, {1, -1}, {0, 0}});
  p.constraint_matrix = RealMatrix::from_rows({{1, 1, 0}, {1, -1, 0}, {0, 0, 1}});
  p.rhs = {4, 4, 4};
  p.cone.generators = RealMatrix::identity(2);
  p.interior_point = {1, 1};
  return p;
}

// maximize (-x1 - x3, -x2 - 2x3) wrt R^2_+, s.t. -x1 - x2 - 3x3 <= -1
inline Problem ex62() {
  Problem p;
  p.objective = RealMatrix::from_rows({{-1, 0}, {0, -1}, {-1, -2}});
  p.constraint_matrix = RealMatrix::from_rows({{-1, -1, -3}});
  p.rhs = {-1};
  p.cone.generators = RealMatrix::identity(2);
  p.interior_point = {1, 1};
  return p;
}

// Every interior weighting is unbounded: objectives (x1 - x2, 2x2 - x1)
// on x1 + x2 >= 1. (P_0) is infeasible.
inline Problem no_solution_instance() {
  Problem p;
  p.objective = RealMatrix::from_rows({{1, -1}, {-1, 2}});
  p.constraint_matrix = RealMatrix::from_rows({{-1, -1}});
  p.rhs = {-1};
  p.cone.generators = RealMatrix::identity(2);
  p.interior_point = {1, 1};
  return p;
}

// Same spirit with b >= 0 for the perturbation route: x1 <= x2.
inline Problem no_solution_instance_b0() {
  Problem p;
  p.objective = RealMatrix::from_rows({{1, -1}, {-1, 2}});
  p.constraint_matrix = RealMatrix::from_rows({{1, -1}});
  p.rhs = {0};
  p.cone.generators = RealMatrix::identity(2);
  p.interior_point = {1, 1};
  return p;
}

inline bool approx_vec(const std::vector<double>& a, const std::vector<double>& b,
                       double tol = 1e-7) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  return true;
}

// Set equality up to order and coordinate tolerance.
inline bool same_point_set(const std::vector<std::vector<double>>& got,
                           const std::vector<std::vector<double>>& want, double tol = 1e-7) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& g : got) {
    bool matched = false;
    for (size_t k = 0; k < want.size(); ++k) {
      if (used[k] || !approx_vec(g, want[k], tol)) continue;
      used[k] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace fixtures
