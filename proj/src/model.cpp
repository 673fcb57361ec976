#include "paravec/model.hpp"

#include <cmath>
#include <limits>

#include "paravec/scalarlp.hpp"

namespace paravec {

namespace {

bool is_zero_vector(const std::vector<double>& v) {
  for (double x : v)
    if (x != 0.0) return false;
  return true;
}

// Feasibility of {Y a + Y a' = 0, 1^T a = 1, a, a' >= 0}: feasible
// exactly when the cone contains a line.
bool cone_contains_line(const Cone& cone) {
  const int q = cone.dim();
  const int t = cone.num_generators();
  ScalarLp lp;
  lp.a = RealMatrix(q + 1, 2 * t);
  lp.rhs.assign(q + 1, 0.0);
  lp.row_kinds.assign(q + 1, RowKind::Eq);
  lp.objective.assign(2 * t, 0.0);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < t; ++j) {
      lp.a(i, j) = cone.generators(i, j);
      lp.a(i, t + j) = cone.generators(i, j);
    }
  for (int j = 0; j < t; ++j) lp.a(q, j) = 1.0;
  lp.rhs[q] = 1.0;
  return feasible_basis(lp).status == LpStatus::Optimal;
}

// Largest s such that center +/- s e_k lies in the cone for every axis k.
// With `free_center` the center is a cone point chosen by the LP (solidity
// test); otherwise it is the given point (interiority test). Returns the
// optimum, +inf when unbounded, or -1 when infeasible.
double cross_polytope_radius(const Cone& cone, const std::vector<double>* center,
                             bool cap_at_one) {
  const int q = cone.dim();
  const int t = cone.num_generators();
  const bool free_center = center == nullptr;
  // Columns: alpha^{k,+} and alpha^{k,-} for k = 1..q (2qt), then the
  // center combination alpha^0 (t, only when free), then s.
  const int n_alpha = 2 * q * t;
  const int n = n_alpha + (free_center ? t : 0) + 1;
  const int s_col = n - 1;
  const int m = 2 * q * q + (cap_at_one ? 1 : 0);

  ScalarLp lp;
  lp.a = RealMatrix(m, n);
  lp.rhs.assign(m, 0.0);
  lp.row_kinds.assign(m, RowKind::Eq);
  lp.objective.assign(n, 0.0);
  lp.objective[s_col] = 1.0;

  int row = 0;
  for (int k = 0; k < q; ++k) {
    for (int sign = 0; sign < 2; ++sign) {
      const int block = (2 * k + sign) * t;
      for (int i = 0; i < q; ++i, ++row) {
        for (int j = 0; j < t; ++j) lp.a(row, block + j) = cone.generators(i, j);
        if (free_center)
          for (int j = 0; j < t; ++j) lp.a(row, n_alpha + j) = -cone.generators(i, j);
        // Y alpha^{k,+-} (- Y alpha^0) -+ s e_k = c or 0
        lp.a(row, s_col) = (sign == 0 ? -1.0 : 1.0) * (i == k ? 1.0 : 0.0);
        lp.rhs[row] = free_center ? 0.0 : (*center)[i];
      }
    }
  }
  if (cap_at_one) {
    lp.row_kinds[row] = RowKind::LessEq;
    lp.a(row, s_col) = 1.0;
    lp.rhs[row] = 1.0;
  }

  const LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Infeasible) return -1.0;
  if (out.status == LpStatus::Unbounded) return std::numeric_limits<double>::infinity();
  return out.objective_value;
}

}  // namespace

std::vector<std::string> check_dimensions(const Problem& p) {
  std::vector<std::string> v;
  const int n = p.objective.rows();
  const int q = p.objective.cols();
  const int m = p.constraint_matrix.rows();
  if (q < 2) v.push_back("DimensionMismatch: need at least two objectives");
  if (n < 1) v.push_back("DimensionMismatch: need at least one variable");
  if (m < 1) v.push_back("DimensionMismatch: need at least one constraint");
  if (p.constraint_matrix.cols() != n)
    v.push_back("DimensionMismatch: constraint matrix has wrong column count");
  if (static_cast<int>(p.rhs.size()) != m)
    v.push_back("DimensionMismatch: rhs length differs from constraint rows");
  if (p.cone.dim() != q)
    v.push_back("DimensionMismatch: cone generators live in the wrong dimension");
  if (p.cone.num_generators() < 1) v.push_back("DimensionMismatch: cone has no generators");
  if (static_cast<int>(p.interior_point.size()) != q)
    v.push_back("DimensionMismatch: interior point has wrong length");
  for (int j = 0; j < p.cone.num_generators(); ++j)
    if (is_zero_vector(p.cone.generators.col(j)))
      v.push_back("DimensionMismatch: zero cone generator column " + std::to_string(j));
  return v;
}

ValidationReport validate_problem(const Problem& p, const Tolerances& tol) {
  ValidationReport rep;
  rep.violations = check_dimensions(p);
  if (!rep.ok()) return rep;

  if (cone_contains_line(p.cone)) rep.violations.push_back("ConeNotPointed: cone contains a line");

  const double solid = cross_polytope_radius(p.cone, nullptr, /*cap_at_one=*/true);
  if (!(solid > tol.interior))
    rep.violations.push_back("ConeNotSolid: cone has empty interior");

  const double radius = cross_polytope_radius(p.cone, &p.interior_point, /*cap_at_one=*/false);
  if (!(radius > tol.interior) && std::isfinite(radius))
    rep.violations.push_back("InteriorPointInvalid: point is not in the cone interior");

  return rep;
}

std::vector<double> default_interior_point(const Cone& cone) {
  const int q = cone.dim();
  const int t = cone.num_generators();
  std::vector<double> c(q, 0.0);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < q; ++i) c[i] += cone.generators(i, j) / t;
  return c;
}

Problem normalize_orientation(const Problem& p, const Tolerances& tol) {
  Problem out = p;
  const int q = p.num_objectives();
  double cq = out.interior_point[q - 1];

  if (std::fabs(cq) <= tol.membership) {
    // Look for a replacement interior point with nonzero last coordinate.
    std::vector<std::vector<double>> candidates;
    const auto mean = default_interior_point(out.cone);
    candidates.push_back(mean);
    {
      std::vector<double> mix(q);
      for (int i = 0; i < q; ++i) mix[i] = 0.5 * (out.interior_point[i] + mean[i]);
      candidates.push_back(mix);
    }
    for (int j = 0; j < out.cone.num_generators(); ++j) {
      std::vector<double> cand(q);
      for (int i = 0; i < q; ++i)
        cand[i] = out.interior_point[i] + 0.5 * out.cone.generators(i, j);
      candidates.push_back(cand);
    }
    bool found = false;
    for (const auto& cand : candidates) {
      if (std::fabs(cand[q - 1]) <= tol.interior) continue;
      const double r = cross_polytope_radius(out.cone, &cand, false);
      if (r > tol.interior) {
        out.interior_point = cand;
        found = true;
        break;
      }
    }
    if (!found)
      throw DegenerateInteriorPoint(
          "normalize_orientation: no interior point with nonzero last coordinate found");
    cq = out.interior_point[q - 1];
  }

  if (cq < 0.0) {
    for (int i = 0; i < out.objective.rows(); ++i)
      for (int j = 0; j < out.objective.cols(); ++j) out.objective(i, j) = -out.objective(i, j);
    for (int i = 0; i < out.cone.generators.rows(); ++i)
      for (int j = 0; j < out.cone.generators.cols(); ++j)
        out.cone.generators(i, j) = -out.cone.generators(i, j);
    for (double& v : out.interior_point) v = -v;
    out.orientation_flipped = !out.orientation_flipped;
    cq = -cq;
  }
  if (cq != 1.0) {
    for (double& v : out.interior_point) v /= cq;
  }
  out.interior_point[q - 1] = 1.0;
  return out;
}

std::vector<double> param_w(const ParamMap& pm, const std::vector<double>& lambda) {
  const int qm1 = pm.lambda_dim();
  if (static_cast<int>(lambda.size()) != qm1)
    throw DimensionMismatch("param_w: lambda length");
  std::vector<double> w(qm1 + 1);
  double tail = 1.0;
  for (int i = 0; i < qm1; ++i) {
    w[i] = lambda[i];
    tail -= pm.c_tilde[i] * lambda[i];
  }
  w[qm1] = tail;
  return w;
}

HalfspaceLambda halfspace_from_weight_functional(const ParamMap& pm,
                                                 const std::vector<double>& z) {
  const int qm1 = pm.lambda_dim();
  if (static_cast<int>(z.size()) != qm1 + 1)
    throw DimensionMismatch("halfspace_from_weight_functional: z length");
  HalfspaceLambda h;
  h.normal.resize(qm1);
  for (int i = 0; i < qm1; ++i) h.normal[i] = z[i] - z[qm1] * pm.c_tilde[i];
  h.offset = z[qm1];
  return h;
}

std::vector<HalfspaceLambda> lambda_polytope(const Problem& normalized) {
  const ParamMap pm = make_param_map(normalized);
  return pm.cone_halfspaces;
}

ParamMap make_param_map(const Problem& normalized) {
  ParamMap pm;
  pm.c_tilde.assign(normalized.interior_point.begin(), normalized.interior_point.end() - 1);
  for (int j = 0; j < normalized.cone.num_generators(); ++j)
    pm.cone_halfspaces.push_back(
        halfspace_from_weight_functional(pm, normalized.cone.generators.col(j)));
  return pm;
}

}  // namespace paravec
