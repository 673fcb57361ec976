#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paravec/densela.hpp"

namespace paravec {

/// Default tolerances. The geometric membership tolerance is the one a
/// user may override (PARAVEC_TOL / --tol); the rest are pinned.
struct Tolerances {
  double feasibility = 1e-7;
  double optimality = 1e-9;
  double pivot = 1e-9;
  double defining = 1e-7;   // defining-vs-redundant separation
  double interior = 1e-7;   // cone interiority margin
  double image = 1e-7;      // image deduplication, per coordinate
  double membership = 1e-9; // geometric membership checks
};

/// Polyhedral ordering cone in V-representation: each column of
/// `generators` is a generating direction.
struct Cone {
  RealMatrix generators;  // q x t

  int dim() const { return generators.rows(); }
  int num_generators() const { return generators.cols(); }
};

/// One linear inequality in lambda-space: {lambda : normal^T lambda + offset >= 0}.
struct HalfspaceLambda {
  std::vector<double> normal;
  double offset = 0.0;

  double value(const std::vector<double>& lambda) const {
    return dot(normal, lambda) + offset;
  }
};

/// The instance: maximize P^T x with respect to the cone ordering,
/// subject to Ax <= b, x >= 0.
struct Problem {
  RealMatrix objective;          // P, n x q
  RealMatrix constraint_matrix;  // A, m x n
  std::vector<double> rhs;       // b, m
  Cone cone;
  std::vector<double> interior_point;  // c, in Int C

  bool orientation_flipped = false;  // set by normalize_orientation

  int num_vars() const { return objective.rows(); }
  int num_objectives() const { return objective.cols(); }
  int num_constraints() const { return constraint_matrix.rows(); }

  /// P^T x for structural x (size n).
  std::vector<double> image_of(const std::vector<double>& x) const {
    return transpose_times(objective, x);
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Map between lambda in R^{q-1} and weight vectors w(lambda) on the
/// normalized slice {w in C+ : c^T w = 1}.
struct ParamMap {
  std::vector<double> c_tilde;                   // first q-1 coordinates of c
  std::vector<HalfspaceLambda> cone_halfspaces;  // describing Lambda

  int lambda_dim() const { return static_cast<int>(c_tilde.size()); }

  bool lambda_in_region(const std::vector<double>& lambda, double tol) const {
    for (const auto& h : cone_halfspaces)
      if (h.value(lambda) < -tol) return false;
    return true;
  }
};

std::vector<std::string> check_dimensions(const Problem& p);

/// Structural checks plus the LP-based cone tests: pointedness,
/// solidity, and interiority of the supplied point.
ValidationReport validate_problem(const Problem& p, const Tolerances& tol = {});

/// Mean of the generator columns; interior for a solid pointed cone.
std::vector<double> default_interior_point(const Cone& cone);

struct DegenerateInteriorPoint : std::runtime_error {
  explicit DegenerateInteriorPoint(const std::string& what) : std::runtime_error(what) {}
};

/// Equivalent problem with c_q = 1: flips (P, C, c) signs when c_q < 0,
/// then rescales c. Idempotent. Throws DegenerateInteriorPoint if no
/// replacement interior point with nonzero last coordinate can be found.
Problem normalize_orientation(const Problem& p, const Tolerances& tol = {});

/// w(lambda) = (lambda_1, ..., lambda_{q-1}, 1 - c_tilde^T lambda).
std::vector<double> param_w(const ParamMap& pm, const std::vector<double>& lambda);

/// Halfspace in lambda-space from a reduced-cost style vector z in R^q:
/// w(lambda)^T z = normal^T lambda + offset.
HalfspaceLambda halfspace_from_weight_functional(const ParamMap& pm,
                                                 const std::vector<double>& z);

/// One halfspace per cone generator; their intersection is Lambda.
std::vector<HalfspaceLambda> lambda_polytope(const Problem& normalized);

/// ParamMap of a normalized problem.
ParamMap make_param_map(const Problem& normalized);

}  // namespace paravec
