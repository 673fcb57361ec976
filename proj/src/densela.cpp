#include "paravec/densela.hpp"

#include <algorithm>
#include <cmath>

namespace paravec {

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RealMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw DimensionMismatch("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<double> RealMatrix::row(int r) const {
  std::vector<double> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
  return v;
}

std::vector<double> RealMatrix::col(int c) const {
  std::vector<double> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void RealMatrix::set_col(int c, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != rows_) throw DimensionMismatch("set_col: size");
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

RealMatrix RealMatrix::transposed() const {
  RealMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double RealMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions");
  RealMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<double> operator*(const RealMatrix& a, const std::vector<double>& x) {
  if (a.cols() != static_cast<int>(x.size())) throw DimensionMismatch("matvec: size");
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> transpose_times(const RealMatrix& a, const std::vector<double>& x) {
  if (a.rows() != static_cast<int>(x.size())) throw DimensionMismatch("transpose_times: size");
  std::vector<double> y(a.cols(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (int j = 0; j < a.cols(); ++j) y[j] += a(i, j) * xi;
  }
  return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size");
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

LuFactorization lu_factorize(const RealMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("lu_factorize: not square");
  const int n = a.rows();

  double max_row_norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double rn = 0.0;
    for (int j = 0; j < n; ++j) rn += std::fabs(a(i, j));
    max_row_norm = std::max(max_row_norm, rn);
  }
  const double tiny = LuFactorization::kSingularRel * std::max(max_row_norm, 1.0);

  LuFactorization f;
  f.lu_ = a;
  f.perm_.resize(n);
  for (int i = 0; i < n; ++i) f.perm_[i] = i;

  RealMatrix& lu = f.lu_;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::fabs(lu(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::fabs(lu(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best < tiny) throw SingularMatrix("lu_factorize: pivot below threshold");
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(f.perm_[k], f.perm_[p]);
    }
    const double inv = 1.0 / lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double l = lu(i, k) * inv;
      lu(i, k) = l;
      if (l == 0.0) continue;
      for (int j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
  return f;
}

std::vector<double> LuFactorization::solve(const std::vector<double>& rhs) const {
  const int n = order();
  if (static_cast<int>(rhs.size()) != n) throw DimensionMismatch("lu_solve: rhs size");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
  // Ly = Pb
  for (int i = 1; i < n; ++i) {
    double s = x[i];
    for (int j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  // Ux = y
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

RealMatrix LuFactorization::solve(const RealMatrix& rhs) const {
  if (rhs.rows() != order()) throw DimensionMismatch("lu_solve: rhs rows");
  RealMatrix x(rhs.rows(), rhs.cols());
  for (int c = 0; c < rhs.cols(); ++c) x.set_col(c, solve(rhs.col(c)));
  return x;
}

}  // namespace paravec
