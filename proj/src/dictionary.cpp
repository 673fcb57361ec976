#include "paravec/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paravec {

namespace {

// Column k of [A I].
std::vector<double> system_column(const Problem& p, int k) {
  const int m = p.num_constraints();
  const int n = p.num_vars();
  std::vector<double> col(m, 0.0);
  if (k < n)
    for (int i = 0; i < m; ++i) col[i] = p.constraint_matrix(i, k);
  else
    col[k - n] = 1.0;
  return col;
}

// Objective row of variable k in the slack-augmented system (zero for slacks).
std::vector<double> objective_row(const Problem& p, int k) {
  if (k < p.num_vars()) return p.objective.row(k);
  return std::vector<double>(p.num_objectives(), 0.0);
}

}  // namespace

int Dictionary::nonbasis_pos(int j) const {
  const auto it = std::lower_bound(nonbasis.begin(), nonbasis.end(), j);
  if (it == nonbasis.end() || *it != j)
    throw PreconditionViolated("variable " + std::to_string(j) + " is not nonbasic");
  return static_cast<int>(it - nonbasis.begin());
}

int Dictionary::basis_pos(int i) const {
  const auto it = std::lower_bound(basis.begin(), basis.end(), i);
  if (it == basis.end() || *it != i)
    throw PreconditionViolated("variable " + std::to_string(i) + " is not basic");
  return static_cast<int>(it - basis.begin());
}

bool Dictionary::primal_feasible(double tol) const {
  for (double v : binv_b)
    if (v < -tol) return false;
  return true;
}

Dictionary materialize(const Problem& p, std::vector<int> basis) {
  const int m = p.num_constraints();
  const int n = p.num_vars();
  const int q = p.num_objectives();
  std::sort(basis.begin(), basis.end());
  if (static_cast<int>(basis.size()) != m)
    throw PreconditionViolated("materialize: basis size must equal row count");
  for (size_t k = 0; k < basis.size(); ++k) {
    if (basis[k] < 0 || basis[k] >= n + m)
      throw PreconditionViolated("materialize: basis index out of range");
    if (k > 0 && basis[k] == basis[k - 1])
      throw PreconditionViolated("materialize: duplicate basis index");
  }

  Dictionary d;
  d.basis = basis;
  d.nonbasis.reserve(n);
  for (int k = 0, b = 0; k < n + m; ++k) {
    if (b < m && basis[b] == k) {
      ++b;
      continue;
    }
    d.nonbasis.push_back(k);
  }
  d.num_structural = n;
  d.num_rows = m;
  d.num_objectives = q;

  RealMatrix b_mat(m, m);
  for (int k = 0; k < m; ++k) b_mat.set_col(k, system_column(p, basis[k]));
  LuFactorization lu;
  try {
    lu = lu_factorize(b_mat);
  } catch (const SingularMatrix&) {
    throw SingularBasis("materialize: basis columns are singular");
  }

  d.binv_b = lu.solve(p.rhs);

  RealMatrix n_mat(m, n);
  for (int k = 0; k < n; ++k) n_mat.set_col(k, system_column(p, d.nonbasis[k]));
  d.binv_n = lu.solve(n_mat);

  RealMatrix p_basic(m, q);
  for (int r = 0; r < m; ++r) {
    const auto row = objective_row(p, basis[r]);
    for (int c = 0; c < q; ++c) p_basic(r, c) = row[c];
  }

  // Z_N = (B^{-1}N)^T P_B - P_N
  d.reduced_costs = d.binv_n.transposed() * p_basic;
  for (int r = 0; r < n; ++r) {
    const auto row = objective_row(p, d.nonbasis[r]);
    for (int c = 0; c < q; ++c) d.reduced_costs(r, c) -= row[c];
  }

  d.xi = transpose_times(p_basic, d.binv_b);
  return d;
}

std::vector<double> basic_solution(const Dictionary& d) {
  std::vector<double> x(d.num_structural, 0.0);
  for (int r = 0; r < d.num_rows; ++r)
    if (d.basis[r] < d.num_structural) x[d.basis[r]] = d.binv_b[r];
  return x;
}

HalfspaceLambda optimality_halfspace(const Dictionary& d, int j, const ParamMap& pm) {
  return halfspace_from_weight_functional(pm, d.reduced_cost_row(j));
}

std::vector<HalfspaceLambda> all_optimality_halfspaces(const Dictionary& d, const ParamMap& pm) {
  std::vector<HalfspaceLambda> hs;
  hs.reserve(d.nonbasis.size());
  for (int j : d.nonbasis) hs.push_back(optimality_halfspace(d, j, pm));
  return hs;
}

std::optional<int> leaving_variable(const Dictionary& d, int j, double tol_pivot) {
  const auto col = d.column_for(j);
  int best_row = -1;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (int r = 0; r < d.num_rows; ++r) {
    if (col[r] <= tol_pivot) continue;
    const double ratio = std::max(d.binv_b[r], 0.0) / col[r];
    if (ratio < best_ratio - 1e-12 ||
        (ratio <= best_ratio + 1e-12 && (best_row < 0 || d.basis[r] < d.basis[best_row]))) {
      if (ratio < best_ratio) best_ratio = ratio;
      best_row = r;
    }
  }
  if (best_row < 0) return std::nullopt;
  return d.basis[best_row];
}

Dictionary pivot(const Problem& p, const Dictionary& d, int entering, int leaving,
                 double tol_pivot) {
  const int jpos = d.nonbasis_pos(entering);
  const int ipos = d.basis_pos(leaving);
  if (d.binv_n(ipos, jpos) <= tol_pivot)
    throw PreconditionViolated("pivot: nonpositive pivot element");
  std::vector<int> next = d.basis;
  next[ipos] = entering;
  return materialize(p, std::move(next));
}

DirectionMaximizer extract_direction(const Dictionary& d, int j, double tol_pivot) {
  const auto col = d.column_for(j);
  for (double v : col)
    if (v > tol_pivot)
      throw PreconditionViolated("extract_direction: column admits a leaving variable");

  DirectionMaximizer dir;
  dir.entering = j;
  dir.direction.assign(d.num_structural + d.num_rows, 0.0);
  dir.direction[j] = 1.0;
  for (int r = 0; r < d.num_rows; ++r) {
    double v = -col[r];
    if (std::fabs(v) <= tol_pivot) v = 0.0;
    dir.direction[d.basis[r]] = v;
  }
  const auto z = d.reduced_cost_row(j);
  dir.image.resize(z.size());
  for (size_t k = 0; k < z.size(); ++k) dir.image[k] = -z[k];
  return dir;
}

}  // namespace paravec
