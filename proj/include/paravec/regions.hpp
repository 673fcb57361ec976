#pragma once

#include <optional>
#include <vector>

#include "paravec/dictionary.hpp"
#include "paravec/model.hpp"

namespace paravec {

/// Split of a dictionary's nonbasic indices into defining and redundant
/// inequalities for its optimality region within Lambda.
struct DefiningSetResult {
  std::vector<int> defining;   // J^D, ascending
  std::vector<int> redundant;  // ascending
  bool region_empty_interior = false;
};

/// Classifies each I^D_j by the sequential-LP test: maximize the
/// violation of I_j over the intersection of the still-untested and
/// defining inequalities with Lambda; a positive (or unbounded) optimum
/// keeps j, otherwise j joins the redundant set and drops out of later
/// constraint sets. Inequalities processed in descending index order.
DefiningSetResult defining_set(const Dictionary& d, const ParamMap& pm,
                               const Tolerances& tol = {});

/// Chebyshev-center witness: a lambda with slack at least s* > tol in
/// every halfspace (scaled by the normal length), or nullopt.
std::optional<std::vector<double>> region_interior_witness(
    const std::vector<HalfspaceLambda>& halfspaces, int lambda_dim,
    const Tolerances& tol = {});

/// Witness satisfying `weak` halfspaces as stated and `strict` ones with
/// positive slack. Certifies points of (region) intersected with the
/// interior of the strict polytope.
std::optional<std::vector<double>> interior_witness_mixed(
    const std::vector<HalfspaceLambda>& weak, const std::vector<HalfspaceLambda>& strict,
    int lambda_dim, const Tolerances& tol = {});

}  // namespace paravec
