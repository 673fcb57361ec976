#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "paravec/scalarlp.hpp"

using namespace paravec;

namespace {

ScalarLp box_lp(const RealMatrix& a, const std::vector<double>& b,
                const std::vector<double>& c) {
  ScalarLp lp;
  lp.a = a;
  lp.rhs = b;
  lp.objective = c;
  return lp;
}

}  // namespace

TEST_CASE("one-variable maximum") {
  const auto out = solve_lp(box_lp(RealMatrix::from_rows({{1}}), {5}, {1}));
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.objective_value == doctest::Approx(5));
  CHECK(out.solution[0] == doctest::Approx(5));
  REQUIRE(out.has_slack_basis);
  CHECK(out.slack_basis == std::vector<int>{0});
}

TEST_CASE("weighted scalarization of the first worked example") {
  const auto p = fixtures::ex51();
  const std::vector<double> w = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const auto out = solve_lp(box_lp(p.constraint_matrix, p.rhs, p.objective * w));
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.objective_value == doctest::Approx(5.0 / 3));
  CHECK(fixtures::approx_vec(out.solution, {5, 0, 0}));
  REQUIRE(out.has_slack_basis);
  CHECK(out.slack_basis == std::vector<int>{0, 4});
}

TEST_CASE("unbounded scalarization yields a certificate ray") {
  const auto p = fixtures::ex51();
  const auto out = solve_lp(box_lp(p.constraint_matrix, p.rhs, {0, 0, 1}));
  REQUIRE(out.status == LpStatus::Unbounded);
  CHECK(fixtures::approx_vec(out.certificate_ray, {0, 0, 1}));
}

TEST_CASE("infeasible detection") {
  // x1 <= -1, x1 >= 0
  const auto out = solve_lp(box_lp(RealMatrix::from_rows({{1}}), {-1}, {1}));
  CHECK(out.status == LpStatus::Infeasible);
}

TEST_CASE("phase 1 finds a structural basis for a negative-rhs row") {
  const auto p = fixtures::ex62();
  ScalarLp lp = box_lp(p.constraint_matrix, p.rhs, {0, 0, 0});
  const auto out = feasible_basis(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  REQUIRE(out.has_slack_basis);
  REQUIRE(out.slack_basis.size() == 1);
  CHECK(out.slack_basis[0] < 3);  // a structural variable carries the row
  // and the basic solution is feasible: -x1 - x2 - 3x3 <= -1
  const double lhs = -out.solution[0] - out.solution[1] - 3 * out.solution[2];
  CHECK(lhs <= -1 + 1e-7);
}

TEST_CASE("feasible_basis: slack basis when rhs is nonnegative") {
  const auto p = fixtures::ex51();
  const auto out = feasible_basis(box_lp(p.constraint_matrix, p.rhs, {0, 0, 0}));
  REQUIRE(out.status == LpStatus::Optimal);
  REQUIRE(out.has_slack_basis);
  CHECK(out.slack_basis == std::vector<int>{3, 4});  // the two slacks
}

TEST_CASE("feasible_basis: infeasible system certified") {
  const auto out = feasible_basis(box_lp(RealMatrix::from_rows({{1}}), {-1}, {0}));
  CHECK(out.status == LpStatus::Infeasible);
}

TEST_CASE("slack basis returned for all-inequality problems") {
  const auto out = solve_lp(
      box_lp(RealMatrix::from_rows({{1, 1}, {1, 0}, {0, 1}}), {4, 2, 3}, {3, 2}));
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.objective_value == doctest::Approx(10));
  CHECK(out.solution[0] == doctest::Approx(2));
  CHECK(out.solution[1] == doctest::Approx(2));
}

TEST_CASE("equality rows and free variables") {
  // maximize x + y s.t. x + y = 3, x - y >= 1, y free
  ScalarLp lp;
  lp.a = RealMatrix::from_rows({{1, 1}, {1, -1}});
  lp.rhs = {3, 1};
  lp.row_kinds = {RowKind::Eq, RowKind::GreaterEq};
  lp.bounds = {VarBound::NonNegative, VarBound::Free};
  lp.objective = {1, 1};
  const auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.objective_value == doctest::Approx(3));
  CHECK(out.solution[0] + out.solution[1] == doctest::Approx(3));
  CHECK(out.solution[0] - out.solution[1] >= 1 - 1e-7);
}

TEST_CASE("free variable can go negative") {
  // maximize -y s.t. y >= -2 (y free): optimum at y = -2
  ScalarLp lp;
  lp.a = RealMatrix::from_rows({{1}});
  lp.rhs = {-2};
  lp.row_kinds = {RowKind::GreaterEq};
  lp.bounds = {VarBound::Free};
  lp.objective = {-1};
  const auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.solution[0] == doctest::Approx(-2));
}

TEST_CASE("duality on random solvable instances") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal(0.0, 5.0);
  std::uniform_real_distribution<double> unif(0.5, 10.0);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(unif(rng)) % 5;
    const int n = 2 + static_cast<int>(unif(rng)) % 5;
    RealMatrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = normal(rng);
    std::vector<double> b(m), c(n);
    for (auto& v : b) v = unif(rng);
    for (auto& v : c) v = normal(rng);

    const auto primal = solve_lp(box_lp(a, b, c));
    if (primal.status != LpStatus::Optimal) continue;
    ++solved;

    // dual: minimize b^T y s.t. A^T y >= c, y >= 0
    ScalarLp dual;
    dual.a = a.transposed();
    dual.rhs = c;
    dual.row_kinds.assign(n, RowKind::GreaterEq);
    dual.objective.resize(m);
    for (int i = 0; i < m; ++i) dual.objective[i] = -b[i];
    const auto d = solve_lp(dual);
    REQUIRE(d.status == LpStatus::Optimal);
    CHECK(std::fabs(-d.objective_value - primal.objective_value) <=
          1e-6 * (1.0 + std::fabs(primal.objective_value)));
  }
  CHECK(solved > 5);
}

TEST_CASE("unbounded certificates verified on random instances") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal(0.0, 5.0);
  std::uniform_real_distribution<double> unif(0.5, 10.0);
  int unbounded_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2, n = 4;
    RealMatrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = normal(rng);
    std::vector<double> b(m), c(n);
    for (auto& v : b) v = unif(rng);
    for (auto& v : c) v = normal(rng);
    const auto out = solve_lp(box_lp(a, b, c));
    if (out.status != LpStatus::Unbounded) continue;
    ++unbounded_seen;
    const auto& r = out.certificate_ray;
    const auto ar = a * r;
    for (double v : ar) CHECK(v <= 1e-7);
    for (double v : r) CHECK(v >= -1e-9);
    CHECK(dot(c, r) > 1e-9);
  }
  CHECK(unbounded_seen > 5);
}

TEST_CASE("determinism: identical inputs give identical outputs") {
  const auto p = fixtures::ex51();
  const std::vector<double> w = {0.2, 0.5, 0.3};
  const auto a = solve_lp(box_lp(p.constraint_matrix, p.rhs, p.objective * w));
  const auto b = solve_lp(box_lp(p.constraint_matrix, p.rhs, p.objective * w));
  REQUIRE(a.status == b.status);
  CHECK(a.objective_value == b.objective_value);  // bitwise
  CHECK(a.solution == b.solution);
  CHECK(a.slack_basis == b.slack_basis);
}
