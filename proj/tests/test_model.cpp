#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "paravec/model.hpp"

using namespace paravec;

namespace {

bool has_violation(const ValidationReport& rep, const std::string& prefix) {
  for (const auto& v : rep.violations)
    if (v.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("positive orthant with all-ones point validates") {
  const auto p = fixtures::ex51();
  CHECK(validate_problem(p).ok());
}

TEST_CASE("a line is not a pointed cone") {
  auto p = fixtures::ex52();
  p.cone.generators = RealMatrix::from_rows({{1, -1}, {0, 0}});  // (1,0) and (-1,0)
  p.interior_point = {1, 0};
  const auto rep = validate_problem(p);
  CHECK(has_violation(rep, "ConeNotPointed"));
}

TEST_CASE("a single ray in R^3 is not solid") {
  auto p = fixtures::ex51();
  p.cone.generators = RealMatrix::from_rows({{1}, {1}, {1}});
  p.interior_point = {1, 1, 1};
  const auto rep = validate_problem(p);
  CHECK(has_violation(rep, "ConeNotSolid"));
}

TEST_CASE("boundary point rejected as interior") {
  auto p = fixtures::ex52();
  p.interior_point = {1, 0};
  const auto rep = validate_problem(p);
  CHECK(has_violation(rep, "InteriorPointInvalid"));
}

TEST_CASE("dimension mismatches reported") {
  auto p = fixtures::ex51();
  p.rhs = {5};
  const auto rep = validate_problem(p);
  CHECK(has_violation(rep, "DimensionMismatch"));
}

TEST_CASE("normalize orientation cases") {
  SUBCASE("already normalized stays put") {
    const auto p = normalize_orientation(fixtures::ex51());
    CHECK(p.interior_point == std::vector<double>{1, 1, 1});
    CHECK_FALSE(p.orientation_flipped);
  }
  SUBCASE("negative last coordinate flips problem data") {
    auto p = fixtures::ex52();
    for (int i = 0; i < p.cone.generators.rows(); ++i)
      for (int j = 0; j < p.cone.generators.cols(); ++j)
        p.cone.generators(i, j) = -p.cone.generators(i, j);
    p.interior_point = {-2, -2};
    const auto n = normalize_orientation(p);
    CHECK(n.orientation_flipped);
    CHECK(n.interior_point == std::vector<double>{1, 1});
    CHECK(n.cone.generators(0, 0) == doctest::Approx(1));
    CHECK(n.objective(0, 0) == doctest::Approx(-p.objective(0, 0)));
  }
  SUBCASE("scaling preserves interiority") {
    auto p = fixtures::ex51();
    p.interior_point = {2, 4, 2};
    const auto n = normalize_orientation(p);
    CHECK(fixtures::approx_vec(n.interior_point, {1, 2, 1}));
  }
  SUBCASE("idempotent") {
    auto p = fixtures::ex51();
    p.interior_point = {2, 4, 2};
    const auto once = normalize_orientation(p);
    const auto twice = normalize_orientation(once);
    CHECK(once.interior_point == twice.interior_point);
    CHECK(once.orientation_flipped == twice.orientation_flipped);
  }
}

TEST_CASE("param_w examples") {
  const auto pm = make_param_map(normalize_orientation(fixtures::ex51()));
  CHECK(fixtures::approx_vec(param_w(pm, {1.0 / 3, 1.0 / 3}), {1.0 / 3, 1.0 / 3, 1.0 / 3}));
  CHECK(fixtures::approx_vec(param_w(pm, {0, 0}), {0, 0, 1}));

  auto p = fixtures::ex51();
  p.interior_point = {1, 2, 1};
  const auto pm2 = make_param_map(normalize_orientation(p));
  CHECK(fixtures::approx_vec(param_w(pm2, {0.5, 0.1}), {0.5, 0.1, 0.3}));
}

TEST_CASE("lambda polytope of the worked examples") {
  SUBCASE("simplex for the orthant in R^3") {
    const auto pm = make_param_map(normalize_orientation(fixtures::ex51()));
    REQUIRE(pm.cone_halfspaces.size() == 3);
    // lambda1 >= 0, lambda2 >= 0, 1 - lambda1 - lambda2 >= 0
    CHECK(pm.lambda_in_region({0.2, 0.2}, 0));
    CHECK(pm.lambda_in_region({0, 1}, 1e-12));
    CHECK_FALSE(pm.lambda_in_region({0.6, 0.6}, 1e-9));
    CHECK_FALSE(pm.lambda_in_region({-0.1, 0.2}, 1e-9));
  }
  SUBCASE("unit interval for the orthant in R^2") {
    const auto pm = make_param_map(normalize_orientation(fixtures::ex52()));
    CHECK(pm.lambda_in_region({0.0}, 1e-12));
    CHECK(pm.lambda_in_region({1.0}, 1e-12));
    CHECK_FALSE(pm.lambda_in_region({1.1}, 1e-9));
    CHECK_FALSE(pm.lambda_in_region({-0.1}, 1e-9));
  }
  SUBCASE("general cone matches direct generator test") {
    Problem p = fixtures::ex52();
    p.cone.generators = RealMatrix::from_rows({{1, 1}, {0, 1}});  // cone{(1,0),(1,1)}
    p.interior_point = {1, 0.5};
    const auto norm = normalize_orientation(p);
    const auto pm = make_param_map(norm);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (int trial = 0; trial < 500; ++trial) {
      const std::vector<double> lambda = {unif(rng)};
      const auto w = param_w(pm, lambda);
      bool direct = true;
      for (int g = 0; g < norm.cone.num_generators(); ++g)
        if (dot(norm.cone.generators.col(g), w) < -1e-9) direct = false;
      CHECK(pm.lambda_in_region(lambda, 1e-9) == direct);
    }
  }
}

TEST_CASE("weight normalization identity holds on random lambdas") {
  auto p = fixtures::ex51();
  p.interior_point = {0.5, 2.5, 1.25};
  const auto pm = make_param_map(normalize_orientation(p));
  const auto c = normalize_orientation(p).interior_point;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<double> lambda = {unif(rng), unif(rng)};
    CHECK(std::fabs(dot(c, param_w(pm, lambda)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("halfspace reconstruction identity") {
  auto p = fixtures::ex51();
  p.interior_point = {1.5, 0.25, 2.0};
  const auto pm = make_param_map(normalize_orientation(p));
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal(0.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<double> z = {normal(rng), normal(rng), normal(rng)};
    const auto h = halfspace_from_weight_functional(pm, z);
    const std::vector<double> lambda = {normal(rng), normal(rng)};
    const double direct = dot(param_w(pm, lambda), z);
    CHECK(std::fabs(direct - h.value(lambda)) <= 1e-10);
  }
}

TEST_CASE("default interior point is the generator mean") {
  const auto c = default_interior_point(fixtures::ex51().cone);
  CHECK(fixtures::approx_vec(c, {1.0 / 3, 1.0 / 3, 1.0 / 3}));
}

TEST_CASE("zero last coordinate of the interior point triggers a search") {
  // cone{(1,1),(1,-1)}: both the given c = (1,0) and the generator mean
  // have a vanishing last coordinate, so a generator mix is used.
  Problem p = fixtures::ex52();
  p.cone.generators = RealMatrix::from_rows({{1, 1}, {1, -1}});
  p.interior_point = {1, 0};
  const auto norm = normalize_orientation(p);
  CHECK(norm.interior_point.back() == 1.0);
  CHECK_FALSE(norm.orientation_flipped);
  // replacement stays interior: x >= |y| strictly
  const double x = norm.interior_point[0], y = norm.interior_point[1];
  CHECK(x > std::fabs(y));
}
