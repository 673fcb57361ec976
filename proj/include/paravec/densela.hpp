#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace paravec {

/// Row-major dense matrix of doubles. Small, no views, value semantics.
class RealMatrix {
 public:
  RealMatrix() : rows_(0), cols_(0) {}
  RealMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RealMatrix: negative dimension");
  }
  static RealMatrix identity(int n);
  static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<double> row(int r) const;
  std::vector<double> col(int c) const;
  void set_col(int c, const std::vector<double>& v);

  RealMatrix transposed() const;
  double max_abs() const;

  const std::vector<double>& data() const { return data_; }

 private:
  int rows_, cols_;
  std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
std::vector<double> operator*(const RealMatrix& a, const std::vector<double>& x);

/// y = A^T x without forming the transpose.
std::vector<double> transpose_times(const RealMatrix& a, const std::vector<double>& x);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double inf_norm(const std::vector<double>& v);

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};
struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// PA = LU with partial pivoting, L and U packed in place.
/// A pivot smaller than kSingularRel times the largest row norm of the
/// input flags the matrix as singular.
class LuFactorization {
 public:
  static constexpr double kSingularRel = 1e-11;

  int order() const { return lu_.rows(); }
  const RealMatrix& packed() const { return lu_; }
  const std::vector<int>& permutation() const { return perm_; }

  /// Solve A x = rhs for one right-hand side.
  std::vector<double> solve(const std::vector<double>& rhs) const;
  /// Solve A X = Rhs column by column.
  RealMatrix solve(const RealMatrix& rhs) const;

 private:
  friend LuFactorization lu_factorize(const RealMatrix& a);
  RealMatrix lu_;
  std::vector<int> perm_;
};

LuFactorization lu_factorize(const RealMatrix& a);

}  // namespace paravec
