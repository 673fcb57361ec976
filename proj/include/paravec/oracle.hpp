#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paravec/engine.hpp"
#include "paravec/model.hpp"

namespace paravec {

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// V-representation generators of an objective-space set: points plus rays.
struct GeneratorSet {
  std::vector<std::vector<double>> points;
  std::vector<std::vector<double>> rays;
};

struct OracleReport {
  long grid_points_checked = 0;
  double max_abs_gap = 0.0;
  struct Mismatch {
    std::vector<double> lambda;
    std::string expected;
    std::string got;
  };
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

struct SupportReport {
  double max_gap = 0.0;
  int bounded_disagreements = 0;
  int samples_used = 0;
  bool ok(double tol) const { return bounded_disagreements == 0 && max_gap <= tol; }
};

/// Axis-aligned bounding box of Lambda, via 2(q-1) LPs.
void lambda_bounding_box(const ParamMap& pm, std::vector<double>& lo, std::vector<double>& hi);

/// Independent check of a solution against per-grid-point scalar LPs:
/// solvable (P_lambda) must match the best reported point, unbounded
/// (P_lambda) must be certified by a reported direction.
OracleReport grid_scalarization_check(const Problem& p, const Solution& sol, int grid_density,
                                      double value_tol = 1e-6);

/// Exhaustive basis enumeration (n + m <= 18): images of all primal
/// feasible basic solutions and of all basic feasible directions of the
/// homogeneous system.
GeneratorSet brute_force_lower_image(const Problem& p, double tol_feas = 1e-9);

/// Sampled support-function comparison of two generator sets describing
/// the same lower image (both extended by the -Y cone rays).
SupportReport support_function_equality(const GeneratorSet& a, const GeneratorSet& b,
                                        const Problem& p, int samples, std::uint64_t seed,
                                        double ray_tol = 1e-7);

GeneratorSet generators_of(const Solution& sol);

/// For sampled interior weights: (P_1(w)) bounded iff every reported
/// direction image has w^T image <= tol. Returns the mismatch count.
int recession_consistency(const Problem& p, const Solution& sol, int samples,
                          std::uint64_t seed, double tol = 1e-8);

/// Evidence that no interior weight admits an optimal solution.
bool check_no_solution(const Problem& p, int samples, std::uint64_t seed);

}  // namespace paravec
