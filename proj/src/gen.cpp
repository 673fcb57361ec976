#include "paravec/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace paravec {

namespace {

Problem skeleton(int q, int n, int m) {
  Problem p;
  p.objective = RealMatrix(n, q);
  p.constraint_matrix = RealMatrix(m, n);
  p.rhs.assign(m, 0.0);
  p.cone.generators = RealMatrix::identity(q);
  p.interior_point.assign(q, 1.0);
  return p;
}

}  // namespace

Problem gen_nondegenerate(int q, int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 10.0);
  std::uniform_real_distribution<double> unif(0.0, 10.0);

  Problem p = skeleton(q, n, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p.constraint_matrix(i, j) = normal(rng);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < q; ++k) p.objective(j, k) = normal(rng);
  for (int i = 0; i < m; ++i) p.rhs[i] = unif(rng);
  return p;
}

Problem gen_degenerate(int q, int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 10.0);
  std::uniform_real_distribution<double> unif(0.0, 10.0);

  Problem p = skeleton(q, n, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p.constraint_matrix(i, j) = normal(rng);

  // b >= 0 with many zero components.
  {
    std::uniform_int_distribution<int> count_dist(0, m / 2);
    const int nonzeros = count_dist(rng);
    std::vector<int> pos(m);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    for (int k = 0; k < nonzeros; ++k) p.rhs[pos[k]] = unif(rng);
  }

  for (int j = 0; j < n; ++j) {
    const double v = normal(rng);
    p.objective(j, 0) = v;
    p.objective(j, 1) = -v;
  }
  if (q >= 3) {
    std::uniform_int_distribution<int> row_dist(0, n - 1);
    p.objective(row_dist(rng), 2) = normal(rng);
  }
  if (q >= 4) {
    std::uniform_int_distribution<int> count_dist(0, q / 2);
    const int nonzeros = count_dist(rng);
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    for (int k = 0; k < nonzeros && k < n; ++k) p.objective(pos[k], 3) = normal(rng);
  }
  for (int k = 4; k < q; ++k)
    for (int j = 0; j < n; ++j) p.objective(j, k) = normal(rng);
  return p;
}

}  // namespace paravec
