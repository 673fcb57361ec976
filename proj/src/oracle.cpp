#include "paravec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "paravec/dictionary.hpp"
#include "paravec/scalarlp.hpp"

namespace paravec {

namespace {

ScalarLp weighted_scalarization(const Problem& p, const std::vector<double>& w) {
  ScalarLp lp;
  lp.a = p.constraint_matrix;
  lp.rhs = p.rhs;
  lp.objective = p.objective * w;
  return lp;
}

std::vector<double> flip_if(bool flip, std::vector<double> v) {
  if (flip)
    for (double& x : v) x = -x;
  return v;
}

// Rejection-sample lambdas from Lambda's bounding box.
std::vector<std::vector<double>> sample_lambdas(const ParamMap& pm, int count,
                                                std::uint64_t seed, double margin = 0.0) {
  std::vector<double> lo, hi;
  lambda_bounding_box(pm, lo, hi);
  const int dim = pm.lambda_dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::vector<double>> out;
  long attempts = 0;
  const long max_attempts = 10000L * count + 10000;
  while (static_cast<int>(out.size()) < count && attempts++ < max_attempts) {
    std::vector<double> lambda(dim);
    for (int k = 0; k < dim; ++k) lambda[k] = lo[k] + (hi[k] - lo[k]) * unif(rng);
    bool inside = true;
    for (const auto& h : pm.cone_halfspaces) {
      double len = 0.0;
      for (double x : h.normal) len += x * x;
      if (h.value(lambda) < margin * std::sqrt(len)) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(std::move(lambda));
  }
  return out;
}

double chebyshev_radius(const ParamMap& pm) {
  // Reuse the witness LP: binary-search-free, just solve max s directly.
  ScalarLp lp;
  const int dim = pm.lambda_dim();
  const int rows = static_cast<int>(pm.cone_halfspaces.size()) + 1;
  lp.a = RealMatrix(rows, dim + 1);
  lp.rhs.assign(rows, 0.0);
  lp.row_kinds.assign(rows, RowKind::GreaterEq);
  lp.bounds.assign(dim + 1, VarBound::Free);
  lp.bounds[dim] = VarBound::NonNegative;
  lp.objective.assign(dim + 1, 0.0);
  lp.objective[dim] = 1.0;
  int r = 0;
  for (const auto& h : pm.cone_halfspaces) {
    double len = 0.0;
    for (double x : h.normal) len += x * x;
    for (int k = 0; k < dim; ++k) lp.a(r, k) = h.normal[k];
    lp.a(r, dim) = -std::sqrt(len);
    lp.rhs[r] = -h.offset;
    ++r;
  }
  lp.row_kinds[r] = RowKind::LessEq;
  lp.a(r, dim) = 1.0;
  lp.rhs[r] = 1.0;
  const LpOutcome out = solve_lp(lp);
  return out.status == LpStatus::Optimal ? out.objective_value : 0.0;
}

}  // namespace

void lambda_bounding_box(const ParamMap& pm, std::vector<double>& lo, std::vector<double>& hi) {
  const int dim = pm.lambda_dim();
  const int rows = static_cast<int>(pm.cone_halfspaces.size());
  lo.assign(dim, 0.0);
  hi.assign(dim, 0.0);
  for (int k = 0; k < dim; ++k) {
    for (int sign = 0; sign < 2; ++sign) {
      ScalarLp lp;
      lp.a = RealMatrix(rows, dim);
      lp.rhs.assign(rows, 0.0);
      lp.row_kinds.assign(rows, RowKind::GreaterEq);
      lp.bounds.assign(dim, VarBound::Free);
      lp.objective.assign(dim, 0.0);
      lp.objective[k] = sign == 0 ? 1.0 : -1.0;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < dim; ++c) lp.a(r, c) = pm.cone_halfspaces[r].normal[c];
        lp.rhs[r] = -pm.cone_halfspaces[r].offset;
      }
      const LpOutcome out = solve_lp(lp);
      if (out.status != LpStatus::Optimal)
        throw NumericalFailure("lambda_bounding_box: Lambda is not a bounded polytope");
      (sign == 0 ? hi : lo)[k] = out.solution[k];
    }
  }
}

OracleReport grid_scalarization_check(const Problem& p, const Solution& sol, int grid_density,
                                      double value_tol) {
  OracleReport rep;
  Problem pp = p;
  if (pp.interior_point.empty()) pp.interior_point = default_interior_point(pp.cone);
  const Problem norm = normalize_orientation(pp);
  const ParamMap pm = make_param_map(norm);
  const bool flip = norm.orientation_flipped;
  const int dim = pm.lambda_dim();

  std::vector<std::vector<double>> point_images, dir_images;
  for (const auto& pe : sol.points) point_images.push_back(flip_if(flip, pe.image));
  for (const auto& de : sol.directions) dir_images.push_back(flip_if(flip, de.image));

  // Grid over the bounding box, filtered to Lambda, plus cell witnesses.
  std::vector<double> lo, hi;
  lambda_bounding_box(pm, lo, hi);
  std::vector<std::vector<double>> lambdas;
  const int density = std::max(grid_density, 2);
  std::vector<int> idx(dim, 0);
  while (true) {
    std::vector<double> lambda(dim);
    for (int k = 0; k < dim; ++k)
      lambda[k] = lo[k] + (hi[k] - lo[k]) * idx[k] / (density - 1);
    if (pm.lambda_in_region(lambda, 1e-9)) lambdas.push_back(lambda);
    int k = 0;
    for (; k < dim; ++k) {
      if (++idx[k] < density) break;
      idx[k] = 0;
    }
    if (k == dim) break;
  }
  for (const auto& cell : sol.cells)
    if (cell.witness) lambdas.push_back(*cell.witness);

  for (const auto& lambda : lambdas) {
    const auto w = param_w(pm, lambda);
    const LpOutcome out = solve_lp(weighted_scalarization(norm, w));
    ++rep.grid_points_checked;
    if (out.status == LpStatus::Optimal) {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& img : point_images) best = std::max(best, dot(w, img));
      const double gap = std::fabs(out.objective_value - best);
      rep.max_abs_gap = std::max(rep.max_abs_gap, gap);
      if (gap > value_tol * (1.0 + std::fabs(out.objective_value))) {
        rep.mismatches.push_back({lambda, "value " + std::to_string(out.objective_value),
                                  "best reported " + std::to_string(best)});
      }
    } else if (out.status == LpStatus::Unbounded) {
      bool certified = false;
      for (const auto& img : dir_images)
        if (dot(w, img) > 1e-8) certified = true;
      if (!certified)
        rep.mismatches.push_back({lambda, "unbounded certificate", "no direction improves"});
    } else {
      rep.mismatches.push_back({lambda, "optimal or unbounded", "LP status failure"});
    }
  }
  return rep;
}

GeneratorSet brute_force_lower_image(const Problem& p, double tol_feas) {
  const int n = p.num_vars();
  const int m = p.num_constraints();
  if (n + m > 18) throw TooLarge("brute_force_lower_image: n + m exceeds 18");

  GeneratorSet gen;
  auto push_point = [&](const std::vector<double>& img) {
    for (const auto& e : gen.points) {
      bool same = true;
      for (size_t k = 0; same && k < img.size(); ++k)
        if (std::fabs(e[k] - img[k]) > 1e-9 * (1.0 + std::fabs(e[k]))) same = false;
      if (same) return;
    }
    gen.points.push_back(img);
  };
  auto push_ray = [&](const std::vector<double>& img) {
    double s = 0.0;
    for (double x : img) s += std::fabs(x);
    if (s <= 1e-9) return;
    std::vector<double> u(img.size());
    for (size_t k = 0; k < img.size(); ++k) u[k] = img[k] / s;
    for (const auto& e : gen.rays) {
      double se = 0.0;
      for (double x : e) se += std::fabs(x);
      bool same = true;
      for (size_t k = 0; same && k < u.size(); ++k)
        if (std::fabs(e[k] / se - u[k]) > 1e-7) same = false;
      if (same) return;
    }
    gen.rays.push_back(img);
  };

  std::vector<int> comb(m);
  for (int i = 0; i < m; ++i) comb[i] = i;
  const int total = n + m;
  while (true) {
    try {
      const Dictionary d = materialize(p, comb);
      if (d.primal_feasible(tol_feas)) push_point(p.image_of(basic_solution(d)));
      for (int j : d.nonbasis) {
        const auto col = d.column_for(j);
        bool nonpos = true;
        for (double v : col)
          if (v > 1e-9) nonpos = false;
        if (!nonpos) continue;
        push_ray(extract_direction(d, j).image);
      }
    } catch (const SingularBasis&) {
    }
    // next combination
    int i = m - 1;
    while (i >= 0 && comb[i] == total - m + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int k = i + 1; k < m; ++k) comb[k] = comb[k - 1] + 1;
  }
  return gen;
}

GeneratorSet generators_of(const Solution& sol) {
  GeneratorSet gen;
  for (const auto& pe : sol.points) gen.points.push_back(pe.image);
  for (const auto& de : sol.directions) gen.rays.push_back(de.image);
  return gen;
}

SupportReport support_function_equality(const GeneratorSet& a, const GeneratorSet& b,
                                        const Problem& p, int samples, std::uint64_t seed,
                                        double ray_tol) {
  Problem pp = p;
  if (pp.interior_point.empty()) pp.interior_point = default_interior_point(pp.cone);
  const Problem norm = normalize_orientation(pp);
  const ParamMap pm = make_param_map(norm);
  const bool flip = norm.orientation_flipped;

  std::vector<std::vector<double>> cone_rays;
  for (int g = 0; g < p.cone.num_generators(); ++g) {
    auto y = p.cone.generators.col(g);
    for (double& v : y) v = -v;
    cone_rays.push_back(std::move(y));
  }

  SupportReport rep;
  const auto lambdas = sample_lambdas(pm, samples, seed);
  for (const auto& lambda : lambdas) {
    const auto w = flip_if(flip, param_w(pm, lambda));
    auto side = [&](const GeneratorSet& g, bool& bounded, double& h) {
      bounded = true;
      for (const auto& r : g.rays)
        if (dot(w, r) > ray_tol) bounded = false;
      for (const auto& r : cone_rays)
        if (dot(w, r) > ray_tol) bounded = false;
      h = -std::numeric_limits<double>::infinity();
      for (const auto& pt : g.points) h = std::max(h, dot(w, pt));
    };
    bool ba, bb;
    double ha, hb;
    side(a, ba, ha);
    side(b, bb, hb);
    ++rep.samples_used;
    if (ba != bb) {
      ++rep.bounded_disagreements;
      continue;
    }
    if (ba && bb) {
      if (!std::isfinite(ha) || !std::isfinite(hb))
        ++rep.bounded_disagreements;
      else
        rep.max_gap = std::max(rep.max_gap, std::fabs(ha - hb));
    }
  }
  return rep;
}

int recession_consistency(const Problem& p, const Solution& sol, int samples,
                          std::uint64_t seed, double tol) {
  Problem pp = p;
  if (pp.interior_point.empty()) pp.interior_point = default_interior_point(pp.cone);
  const Problem norm = normalize_orientation(pp);
  const ParamMap pm = make_param_map(norm);
  const bool flip = norm.orientation_flipped;

  std::vector<std::vector<double>> dir_images;
  for (const auto& de : sol.directions) dir_images.push_back(flip_if(flip, de.image));

  const double margin = 0.05 * std::max(chebyshev_radius(pm), 1e-6);
  const auto lambdas = sample_lambdas(pm, samples, seed, margin);
  int mismatches = 0;
  for (const auto& lambda : lambdas) {
    const auto w = param_w(pm, lambda);
    const LpOutcome out = solve_lp(weighted_scalarization(norm, w));
    bool rays_say_bounded = true;
    for (const auto& img : dir_images)
      if (dot(w, img) > tol) rays_say_bounded = false;
    const bool lp_bounded = out.status == LpStatus::Optimal;
    if (lp_bounded != rays_say_bounded) ++mismatches;
  }
  return mismatches;
}

bool check_no_solution(const Problem& p, int samples, std::uint64_t seed) {
  Problem pp = p;
  if (pp.interior_point.empty()) pp.interior_point = default_interior_point(pp.cone);
  const Problem norm = normalize_orientation(pp);
  const ParamMap pm = make_param_map(norm);

  const double margin = 0.05 * std::max(chebyshev_radius(pm), 1e-6);
  const auto lambdas = sample_lambdas(pm, samples, seed, margin);
  for (const auto& lambda : lambdas) {
    const auto w = param_w(pm, lambda);
    const LpOutcome out = solve_lp(weighted_scalarization(norm, w));
    if (out.status == LpStatus::Optimal) return false;
  }
  return true;
}

}  // namespace paravec
