#pragma once

#include <optional>
#include <vector>

#include "paravec/densela.hpp"
#include "paravec/model.hpp"

namespace paravec {

struct SingularBasis : std::runtime_error {
  explicit SingularBasis(const std::string& what) : std::runtime_error(what) {}
};
struct PreconditionViolated : std::logic_error {
  explicit PreconditionViolated(const std::string& what) : std::logic_error(what) {}
};

/// A dictionary of the slack-augmented system [A I]x = b for the
/// lambda-parametrized scalarization. Indices are 0-based over
/// {0..n+m-1}; basis and nonbasis are kept sorted ascending. Immutable
/// after materialization.
struct Dictionary {
  std::vector<int> basis;      // size m
  std::vector<int> nonbasis;   // size n
  std::vector<double> binv_b;  // B^{-1} b, rows follow basis order
  RealMatrix binv_n;           // B^{-1} N, columns follow nonbasis order
  RealMatrix reduced_costs;    // Z_N = (B^{-1}N)^T P_B - P_N, one row per nonbasic
  std::vector<double> xi;      // P_B^T B^{-1} b
  int num_structural = 0;      // n
  int num_rows = 0;            // m
  int num_objectives = 0;      // q

  int nonbasis_pos(int j) const;
  int basis_pos(int i) const;

  /// Column of B^{-1}N for nonbasic variable j.
  std::vector<double> column_for(int j) const { return binv_n.col(nonbasis_pos(j)); }
  /// Row of Z_N for nonbasic variable j (a q-vector).
  std::vector<double> reduced_cost_row(int j) const {
    return reduced_costs.row(nonbasis_pos(j));
  }
  bool primal_feasible(double tol) const;
};

/// An unbounded-direction maximizer: x^h over all n+m coordinates with
/// its image in objective space.
struct DirectionMaximizer {
  std::vector<double> direction;  // n+m coordinates
  std::vector<double> image;      // -Z_N^T e^j, a q-vector
  int entering = -1;              // the generating nonbasic index

  std::vector<double> structural(int n) const {
    return {direction.begin(), direction.begin() + n};
  }
};

/// Build the dictionary for the given basis from scratch (LU of the
/// basis columns). Primal feasibility is not required here.
Dictionary materialize(const Problem& p, std::vector<int> basis);

/// Structural coordinates of the basic solution (x_N = 0).
std::vector<double> basic_solution(const Dictionary& d);

/// I^D_j as a halfspace in lambda-space.
HalfspaceLambda optimality_halfspace(const Dictionary& d, int j, const ParamMap& pm);

/// All I^D_j in nonbasis order.
std::vector<HalfspaceLambda> all_optimality_halfspaces(const Dictionary& d, const ParamMap& pm);

/// Minimum-ratio leaving variable for entering j, ties broken by the
/// smallest basic variable index; nullopt when the column is nonpositive.
std::optional<int> leaving_variable(const Dictionary& d, int j, double tol_pivot = 1e-9);

/// Rematerialized dictionary after the pivot j <-> i.
Dictionary pivot(const Problem& p, const Dictionary& d, int entering, int leaving,
                 double tol_pivot = 1e-9);

/// Direction maximizer for an entering j with no leaving variable.
DirectionMaximizer extract_direction(const Dictionary& d, int j, double tol_pivot = 1e-9);

}  // namespace paravec
