#include "paravec/engine.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "paravec/scalarlp.hpp"

namespace paravec {

namespace {

bool close_vec(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  double scale = 1.0;
  for (double v : a) scale = std::max(scale, std::fabs(v));
  for (size_t k = 0; k < a.size(); ++k)
    if (std::fabs(a[k] - b[k]) > tol * scale) return false;
  return true;
}

// (P_1(w)): maximize (Pw)^T x subject to Ax <= b, x >= 0.
ScalarLp weighted_scalarization(const Problem& p, const std::vector<double>& w) {
  ScalarLp lp;
  lp.a = p.constraint_matrix;
  lp.rhs = p.rhs;
  lp.objective = p.objective * w;
  return lp;
}

bool rhs_nonnegative(const Problem& p, double tol) {
  for (double v : p.rhs)
    if (v < -tol) return false;
  return true;
}

// The (lambda, mu) extension: objective columns gain a -1 penalty column
// in the mu slot, the cone gains the mu-axis generator, and the interior
// point keeps mu = 0 so that w'(lambda, mu) normalizes exactly as before.
Problem extended_perturbation_problem(const Problem& p) {
  const int n = p.num_vars();
  const int q = p.num_objectives();
  const int t = p.cone.num_generators();

  Problem ext;
  ext.constraint_matrix = p.constraint_matrix;
  ext.rhs = p.rhs;

  ext.objective = RealMatrix(n, q + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c + 1 < q; ++c) ext.objective(r, c) = p.objective(r, c);
    ext.objective(r, q - 1) = -1.0;
    ext.objective(r, q) = p.objective(r, q - 1);
  }

  ext.cone.generators = RealMatrix(q + 1, t + 1);
  for (int g = 0; g < t; ++g) {
    for (int c = 0; c + 1 < q; ++c) ext.cone.generators(c, g) = p.cone.generators(c, g);
    ext.cone.generators(q, g) = p.cone.generators(q - 1, g);
  }
  ext.cone.generators(q - 1, t) = 1.0;

  ext.interior_point.assign(q + 1, 0.0);
  for (int c = 0; c + 1 < q; ++c) ext.interior_point[c] = p.interior_point[c];
  ext.interior_point[q] = 1.0;
  return ext;
}

// Restriction of an extended-region halfspace to the mu = 0 slice.
HalfspaceLambda slice_mu_zero(const HalfspaceLambda& h) {
  HalfspaceLambda s;
  s.normal.assign(h.normal.begin(), h.normal.end() - 1);
  s.offset = h.offset;
  return s;
}

// Initial dictionary for the original problem when the extended region
// meets ri(Lambda x {0}).
std::optional<Dictionary> try_m_condition(const Problem& normalized, const ParamMap& pm,
                                          const Dictionary& ext_dict, const ParamMap& pm_ext,
                                          const Tolerances& tol) {
  std::vector<HalfspaceLambda> weak;
  weak.reserve(ext_dict.nonbasis.size());
  for (int j : ext_dict.nonbasis)
    weak.push_back(slice_mu_zero(optimality_halfspace(ext_dict, j, pm_ext)));
  const auto witness = interior_witness_mixed(weak, pm.cone_halfspaces, pm.lambda_dim(), tol);
  if (!witness) return std::nullopt;
  return materialize(normalized, ext_dict.basis);
}

std::vector<double> negated(std::vector<double> v) {
  for (double& x : v) x = -x;
  return v;
}

// target == sum theta_i pts_i + sum gamma_r rays_r, theta a convex combination.
bool in_conv_plus_cone(const std::vector<double>& target,
                       const std::vector<const std::vector<double>*>& pts,
                       const std::vector<const std::vector<double>*>& rays) {
  const int q = static_cast<int>(target.size());
  const int np = static_cast<int>(pts.size());
  const int nr = static_cast<int>(rays.size());
  ScalarLp lp;
  const int rows = q + 1;
  lp.a = RealMatrix(rows, np + nr);
  lp.rhs.assign(rows, 0.0);
  lp.row_kinds.assign(rows, RowKind::Eq);
  lp.objective.assign(np + nr, 0.0);
  for (int c = 0; c < np; ++c)
    for (int r = 0; r < q; ++r) lp.a(r, c) = (*pts[c])[r];
  for (int c = 0; c < nr; ++c)
    for (int r = 0; r < q; ++r) lp.a(r, np + c) = (*rays[c])[r];
  for (int r = 0; r < q; ++r) lp.rhs[r] = target[r];
  for (int c = 0; c < np; ++c) lp.a(q, c) = 1.0;
  lp.rhs[q] = 1.0;
  return feasible_basis(lp).status == LpStatus::Optimal;
}

bool in_cone_of(const std::vector<double>& target,
                const std::vector<const std::vector<double>*>& rays) {
  const int q = static_cast<int>(target.size());
  const int nr = static_cast<int>(rays.size());
  ScalarLp lp;
  lp.a = RealMatrix(q, nr);
  lp.rhs = target;
  lp.row_kinds.assign(q, RowKind::Eq);
  lp.objective.assign(nr, 0.0);
  for (int c = 0; c < nr; ++c)
    for (int r = 0; r < q; ++r) lp.a(r, c) = (*rays[c])[r];
  return feasible_basis(lp).status == LpStatus::Optimal;
}

}  // namespace

InitResult init_via_weight(const Problem& normalized, const ParamMap& pm,
                           const std::vector<double>& w0, const Tolerances& tol) {
  InitResult res;
  const double cw = dot(normalized.interior_point, w0);
  if (!(cw > 1e-12))
    throw NumericalFailure("init_via_weight: weight has nonpositive c^T w");
  std::vector<double> w(w0.size());
  for (size_t k = 0; k < w0.size(); ++k) w[k] = w0[k] / cw;

  const LpOutcome out = solve_lp(weighted_scalarization(normalized, w));
  if (out.status == LpStatus::Infeasible) {
    res.kind = InitResult::Kind::Infeasible;
    return res;
  }
  if (out.status == LpStatus::Unbounded) {
    res.kind = InitResult::Kind::ScalarUnbounded;
    return res;
  }
  if (out.status != LpStatus::Optimal || !out.has_slack_basis)
    throw NumericalFailure("init_via_weight: scalarization did not yield a clean basis");

  Dictionary d = materialize(normalized, out.slack_basis);

  bool w_interior = true;
  for (int g = 0; g < normalized.cone.num_generators(); ++g)
    if (dot(normalized.cone.generators.col(g), w) <= tol.defining) w_interior = false;
  if (!w_interior) {
    const auto hs = all_optimality_halfspaces(d, pm);
    if (!interior_witness_mixed(hs, pm.cone_halfspaces, pm.lambda_dim(), tol)) {
      res.kind = InitResult::Kind::NoWitness;
      return res;
    }
  }
  res.kind = InitResult::Kind::Dictionary;
  res.dictionary = std::move(d);
  res.weight = std::move(w);
  return res;
}

InitResult init_via_p0(const Problem& normalized, const ParamMap& pm, const Tolerances& tol) {
  const int m = normalized.num_constraints();
  const int n = normalized.num_vars();
  const int q = normalized.num_objectives();
  const int t = normalized.cone.num_generators();

  // Variables (u, w): minimize b^T u subject to A^T u - P w >= 0,
  // Y^T (w - c) >= 0, u >= 0, w free.
  ScalarLp lp;
  lp.a = RealMatrix(n + t, m + q);
  lp.rhs.assign(n + t, 0.0);
  lp.row_kinds.assign(n + t, RowKind::GreaterEq);
  lp.bounds.assign(m + q, VarBound::NonNegative);
  for (int k = 0; k < q; ++k) lp.bounds[m + k] = VarBound::Free;
  lp.objective.assign(m + q, 0.0);
  for (int i = 0; i < m; ++i) lp.objective[i] = -normalized.rhs[i];
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < m; ++i) lp.a(r, i) = normalized.constraint_matrix(i, r);
    for (int k = 0; k < q; ++k) lp.a(r, m + k) = -normalized.objective(r, k);
  }
  for (int g = 0; g < t; ++g) {
    const auto y = normalized.cone.generators.col(g);
    for (int k = 0; k < q; ++k) lp.a(n + g, m + k) = y[k];
    lp.rhs[n + g] = dot(y, normalized.interior_point);
  }

  LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Infeasible) {
    InitResult res;
    res.kind = InitResult::Kind::NoSolution;
    return res;
  }
  if (out.status == LpStatus::Unbounded) {
    // Feasibility alone certifies a usable weight; b !>= 0 can push the
    // objective below any bound.
    out = feasible_basis(lp);
    if (out.status != LpStatus::Optimal)
      throw NumericalFailure("init_via_p0: feasibility re-solve failed");
  }
  if (out.status != LpStatus::Optimal) throw NumericalFailure("init_via_p0: LP breakdown");

  std::vector<double> w(out.solution.begin() + m, out.solution.begin() + m + q);
  const double cw = dot(normalized.interior_point, w);
  if (!(cw > 1e-12)) throw NumericalFailure("init_via_p0: degenerate weight from (P_0)");
  for (double& v : w) v /= cw;

  InitResult res = init_via_weight(normalized, pm, w, tol);
  if (res.kind == InitResult::Kind::ScalarUnbounded)
    throw NumericalFailure("init_via_p0: scalarization unbounded despite (P_0) certificate");
  return res;
}

InitResult init_perturbation(const Problem& normalized, const ParamMap& pm,
                             const EngineOptions& opts, PerturbationTrace* trace) {
  if (!rhs_nonnegative(normalized, opts.tol.feasibility))
    throw PreconditionViolated("init_perturbation: requires b >= 0");

  const int n = normalized.num_vars();
  const int m = normalized.num_constraints();
  const Problem ext = extended_perturbation_problem(normalized);
  const ParamMap pm_ext = make_param_map(ext);

  std::vector<int> slack_basis(m);
  for (int i = 0; i < m; ++i) slack_basis[i] = n + i;
  Dictionary start = materialize(ext, slack_basis);
  if (trace) trace->initial_region = all_optimality_halfspaces(start, pm_ext);

  long explored = 1;
  auto finish = [&](const Dictionary& ext_dict) -> std::optional<InitResult> {
    const auto d0 = try_m_condition(normalized, pm, ext_dict, pm_ext, opts.tol);
    if (!d0) return std::nullopt;
    InitResult res;
    res.kind = InitResult::Kind::Dictionary;
    res.dictionary = *d0;
    if (trace) trace->dictionaries_explored = explored;
    return res;
  };

  if (auto r = finish(start)) return *r;

  struct Node {
    Dictionary d;
    std::vector<int> defining;
    std::set<std::pair<int, int>> explored_pivots;
  };
  std::map<std::vector<int>, Node> boundary;
  std::set<std::vector<int>> visited;
  {
    Node node;
    node.defining = defining_set(start, pm_ext, opts.tol).defining;
    node.d = std::move(start);
    boundary.emplace(slack_basis, std::move(node));
  }

  while (!boundary.empty()) {
    const std::vector<int> key = boundary.begin()->first;
    Node& node = boundary.begin()->second;
    for (int j : node.defining) {
      const auto leave = leaving_variable(node.d, j, opts.tol.pivot);
      if (!leave) continue;  // (P_{lambda,mu}) unbounded beyond I_j; nothing to collect
      const int i = *leave;
      if (node.explored_pivots.count({j, i})) continue;
      std::vector<int> next = key;
      *std::find(next.begin(), next.end(), i) = j;
      std::sort(next.begin(), next.end());
      if (visited.count(next)) continue;
      if (auto it = boundary.find(next); it != boundary.end()) {
        it->second.explored_pivots.insert({i, j});
        continue;
      }
      Dictionary dn = pivot(ext, node.d, j, i, opts.tol.pivot);
      if (++explored > opts.max_dictionaries)
        throw EngineLimitExceeded("init_perturbation: dictionary cap exceeded");
      if (auto r = finish(dn)) return *r;
      Node nn;
      nn.defining = defining_set(dn, pm_ext, opts.tol).defining;
      nn.d = std::move(dn);
      nn.explored_pivots.insert({i, j});
      boundary.emplace(std::move(next), std::move(nn));
    }
    visited.insert(key);
    boundary.erase(key);
  }

  InitResult res;
  res.kind = InitResult::Kind::NoSolution;
  if (trace) trace->dictionaries_explored = explored;
  return res;
}

bool dedupe_image_insert(std::vector<std::vector<double>>& images,
                         const std::vector<double>& image, bool is_direction,
                         double tol_img) {
  auto normalized = [&](const std::vector<double>& v) {
    if (!is_direction) return v;
    double s = 0.0;
    for (double x : v) s += std::fabs(x);
    if (s <= 0.0) return v;
    std::vector<double> u(v.size());
    for (size_t k = 0; k < v.size(); ++k) u[k] = v[k] / s;
    return u;
  };
  const auto a = normalized(image);
  for (const auto& existing : images) {
    const auto b = normalized(existing);
    bool same = a.size() == b.size();
    for (size_t k = 0; same && k < a.size(); ++k)
      if (std::fabs(a[k] - b[k]) > tol_img) same = false;
    if (same) return false;
  }
  images.push_back(image);
  return true;
}

Solution run_algorithm1(const Problem& normalized, const ParamMap& pm, const Dictionary& d0,
                        const EngineOptions& opts) {
  Solution sol;
  sol.lambda_halfspaces = pm.cone_halfspaces;

  struct Node {
    Dictionary d;
    std::vector<int> defining;
    std::vector<HalfspaceLambda> def_halfspaces;
    std::set<std::pair<int, int>> explored_pivots;  // (entering, leaving)
  };
  std::map<std::vector<int>, Node> boundary;
  std::set<std::vector<int>> visited;
  std::set<std::tuple<std::vector<int>, int, int>> pivot_ledger;
  std::vector<std::vector<double>> point_images_seen;
  std::vector<std::vector<double>> direction_images_seen;

  auto insert_point = [&](const Dictionary& d) {
    const auto x = basic_solution(d);
    for (const auto& pe : sol.points)
      if (close_vec(pe.x, x, 1e-9)) return;  // X-bar is a set
    const auto img = normalized.image_of(x);
    if (opts.dedupe_images &&
        !dedupe_image_insert(point_images_seen, img, false, opts.tol.image))
      return;
    sol.points.push_back({x, img, d.basis});
  };

  auto insert_direction = [&](const Dictionary& d, int j) {
    const auto dm = extract_direction(d, j, opts.tol.pivot);
    const auto xs = dm.structural(normalized.num_vars());
    for (const auto& de : sol.directions)
      if (close_vec(de.x, xs, 1e-9)) return;  // exact-coordinate dedup, always on
    if (opts.dedupe_images &&
        !dedupe_image_insert(direction_images_seen, dm.image, true, opts.tol.image))
      return;
    sol.directions.push_back({xs, dm.image, d.basis, j});
  };

  auto make_node = [&](Dictionary d) {
    Node node;
    node.defining = defining_set(d, pm, opts.tol).defining;
    node.def_halfspaces.reserve(node.defining.size());
    for (int j : node.defining) node.def_halfspaces.push_back(optimality_halfspace(d, j, pm));
    node.d = std::move(d);
    return node;
  };

  sol.dictionaries_materialized = 1;
  insert_point(d0);
  boundary.emplace(d0.basis, make_node(d0));

  while (!boundary.empty()) {
    const std::vector<int> key = boundary.begin()->first;
    Node& node = boundary.begin()->second;

    for (int j : node.defining) {
      const auto leave = leaving_variable(node.d, j, opts.tol.pivot);
      if (!leave) {
        sol.unbounded_cuts.push_back({key, j, optimality_halfspace(node.d, j, pm)});
        insert_direction(node.d, j);
        continue;
      }
      const int i = *leave;
      if (node.explored_pivots.count({j, i})) continue;

      std::vector<int> next = key;
      *std::find(next.begin(), next.end(), i) = j;
      std::sort(next.begin(), next.end());
      if (visited.count(next)) continue;
      if (auto it = boundary.find(next); it != boundary.end()) {
        it->second.explored_pivots.insert({i, j});
        continue;
      }

      if (!pivot_ledger.insert({key, j, i}).second) sol.pivot_repeat_detected = true;
      ++sol.pivots_performed;
      Dictionary dn = pivot(normalized, node.d, j, i, opts.tol.pivot);
      if (++sol.dictionaries_materialized > opts.max_dictionaries)
        throw EngineLimitExceeded("run_algorithm1: dictionary cap " +
                                  std::to_string(opts.max_dictionaries) + " exceeded");
      insert_point(dn);
      Node nn = make_node(std::move(dn));
      nn.explored_pivots.insert({i, j});
      boundary.emplace(std::move(next), std::move(nn));
    }

    SolutionCell cell;
    cell.basis = key;
    cell.defining = node.defining;
    cell.halfspaces = node.def_halfspaces;
    cell.witness =
        interior_witness_mixed(node.def_halfspaces, pm.cone_halfspaces, pm.lambda_dim(), opts.tol);
    sol.cells.push_back(std::move(cell));
    visited.insert(key);
    boundary.erase(key);
  }

  sol.bounded = sol.directions.empty();
  return sol;
}

void filter_generators(Solution& sol, const Cone& cone, const Tolerances& tol) {
  (void)tol;
  std::vector<std::vector<double>> cone_rays;
  for (int g = 0; g < cone.num_generators(); ++g)
    cone_rays.push_back(negated(cone.generators.col(g)));

  std::vector<bool> point_alive(sol.points.size(), true);
  for (size_t k = 0; k < sol.points.size(); ++k) {
    std::vector<const std::vector<double>*> pts;
    for (size_t o = 0; o < sol.points.size(); ++o)
      if (o != k && point_alive[o]) pts.push_back(&sol.points[o].image);
    if (pts.empty()) continue;  // keep at least one point
    std::vector<const std::vector<double>*> rays;
    for (const auto& de : sol.directions) rays.push_back(&de.image);
    for (const auto& r : cone_rays) rays.push_back(&r);
    if (in_conv_plus_cone(sol.points[k].image, pts, rays)) point_alive[k] = false;
  }

  std::vector<bool> dir_alive(sol.directions.size(), true);
  for (size_t k = 0; k < sol.directions.size(); ++k) {
    std::vector<const std::vector<double>*> rays;
    for (size_t o = 0; o < sol.directions.size(); ++o)
      if (o != k && dir_alive[o]) rays.push_back(&sol.directions[o].image);
    for (const auto& r : cone_rays) rays.push_back(&r);
    if (in_cone_of(sol.directions[k].image, rays)) dir_alive[k] = false;
  }

  std::vector<PointEntry> pts;
  for (size_t k = 0; k < sol.points.size(); ++k)
    if (point_alive[k]) pts.push_back(std::move(sol.points[k]));
  sol.points = std::move(pts);
  std::vector<DirectionEntry> dirs;
  for (size_t k = 0; k < sol.directions.size(); ++k)
    if (dir_alive[k]) dirs.push_back(std::move(sol.directions[k]));
  sol.directions = std::move(dirs);

  sol.lower_image_rays.clear();
  for (const auto& de : sol.directions) sol.lower_image_rays.push_back(de.image);
  for (const auto& r : cone_rays) sol.lower_image_rays.push_back(r);
  sol.bounded = sol.directions.empty();
}

Solution solve_problem(const Problem& input, const EngineOptions& opts) {
  Problem p = input;
  if (p.interior_point.empty() && p.cone.num_generators() > 0)
    p.interior_point = default_interior_point(p.cone);

  const ValidationReport rep = validate_problem(p, opts.tol);
  if (!rep.ok()) {
    std::string msg = "invalid problem:";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw InvalidProblem(msg);
  }

  const Problem norm = normalize_orientation(p, opts.tol);
  const ParamMap pm = make_param_map(norm);
  const bool b_ok = rhs_nonnegative(norm, opts.tol.feasibility);

  // The initialization routes assume a feasible constraint system.
  if (!b_ok) {
    ScalarLp feas;
    feas.a = norm.constraint_matrix;
    feas.rhs = norm.rhs;
    feas.objective.assign(norm.num_vars(), 0.0);
    if (feasible_basis(feas).status == LpStatus::Infeasible) {
      Solution sol;
      sol.status = SolveStatus::Infeasible;
      sol.orientation_flipped = norm.orientation_flipped;
      return sol;
    }
  }

  InitResult init;
  switch (opts.init) {
    case InitMethod::Weight: {
      std::vector<double> w = opts.init_weight;
      if (static_cast<int>(w.size()) != norm.num_objectives())
        throw InvalidProblem("initial weight has wrong length");
      if (norm.orientation_flipped) w = negated(w);
      init = init_via_weight(norm, pm, w, opts.tol);
      if (init.kind == InitResult::Kind::ScalarUnbounded ||
          init.kind == InitResult::Kind::NoWitness)
        init = init_via_p0(norm, pm, opts.tol);
      break;
    }
    case InitMethod::Perturbation: {
      if (b_ok) {
        init = init_perturbation(norm, pm, opts);
      } else {
        init = init_via_p0(norm, pm, opts.tol);
      }
      break;
    }
    case InitMethod::P0:
      init = init_via_p0(norm, pm, opts.tol);
      break;
  }
  if (init.kind == InitResult::Kind::NoWitness && b_ok)
    init = init_perturbation(norm, pm, opts);

  Solution sol;
  if (init.kind == InitResult::Kind::Infeasible) {
    sol.status = SolveStatus::Infeasible;
    sol.orientation_flipped = norm.orientation_flipped;
    return sol;
  }
  if (init.kind == InitResult::Kind::NoSolution) {
    sol.status = SolveStatus::NoSolution;
    sol.orientation_flipped = norm.orientation_flipped;
    return sol;
  }
  if (init.kind != InitResult::Kind::Dictionary)
    throw NumericalFailure("initialization did not produce a dictionary");

  sol = run_algorithm1(norm, pm, *init.dictionary, opts);
  sol.orientation_flipped = norm.orientation_flipped;
  if (norm.orientation_flipped) {
    for (auto& pe : sol.points) pe.image = negated(pe.image);
    for (auto& de : sol.directions) de.image = negated(de.image);
  }
  sol.lower_image_rays.clear();
  for (const auto& de : sol.directions) sol.lower_image_rays.push_back(de.image);
  for (int g = 0; g < input.cone.num_generators(); ++g)
    sol.lower_image_rays.push_back(negated(input.cone.generators.col(g)));

  if (opts.apply_generator_filter) filter_generators(sol, input.cone, opts.tol);
  return sol;
}

}  // namespace paravec
