// Copyright 2026 The fracgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "fracgen/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fracgen/errors.hpp"

namespace fracgen {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

DenseMatrix DenseMatrix::principal_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_ || first + count > cols_) {
    throw UsageError("principal block out of range");
  }
  DenseMatrix b(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(first + i, first + j);
  }
  return b;
}

Vector DenseMatrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Vector DenseMatrix::operator*(std::span<const double> x) const {
  if (x.size() != cols_) throw UsageError("matrix-vector size mismatch");
  Vector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* r = data_.data() + i * cols_;
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw UsageError("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw UsageError("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

bool DenseMatrix::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

double DenseMatrix::norm1() const {
  std::vector<double> sums(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) sums[j] += std::fabs((*this)(i, j));
  }
  return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw UsageError("dot product size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double quadratic_form(const DenseMatrix& a, std::span<const double> x) {
  return dot(x, a * x);
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::fabs(v));
  return m;
}

LuFactorization::LuFactorization(DenseMatrix a) : lu_(std::move(a)) {
  const std::size_t n = lu_.rows();
  if (n != lu_.cols()) throw UsageError("LU needs a square matrix");
  const double anorm = lu_.norm1();
  perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::fabs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(lu_(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0 || !std::isfinite(best)) {
      throw SolverFailure("matrix is singular (zero pivot in column " + std::to_string(k) + ")");
    }
    if (pivot != k) {
      auto rk = lu_.row(k);
      auto rp = lu_.row(pivot);
      std::swap_ranges(rk.begin(), rk.end(), rp.begin());
      std::swap(perm_[k], perm_[pivot]);
    }
    const double inv = 1.0 / lu_(k, k);
    const auto rk = lu_.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      auto ri = lu_.row(i);
      const double f = ri[k] * inv;
      ri[k] = f;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
    }
  }

  if (n == 0 || anorm == 0.0) {
    rcond_ = n == 0 ? 1.0 : 0.0;
  } else {
    rcond_ = 1.0 / (anorm * estimate_inverse_norm1());
  }
  if (!(rcond_ >= kMinReciprocalCondition)) {
    throw SolverFailure("matrix is numerically singular (reciprocal condition estimate " +
                        std::to_string(rcond_) + ")");
  }
}

void LuFactorization::solve_in_place(std::span<double> b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) throw UsageError("right-hand side size mismatch");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = lu_.row(i);
    double acc = x[i];
    for (std::size_t j = 0; j < i; ++j) acc -= r[j] * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto r = lu_.row(i);
    double acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= r[j] * x[j];
    x[i] = acc / r[i];
  }
  std::copy(x.begin(), x.end(), b.begin());
}

Vector LuFactorization::solve(std::span<const double> b) const {
  Vector x(b.begin(), b.end());
  solve_in_place(x);
  return x;
}

void LuFactorization::solve_transposed_in_place(std::span<double> b) const {
  // A^T x = b with PA = LU: U^T L^T P x = b.
  const std::size_t n = lu_.rows();
  Vector y(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    double acc = y[i];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_(j, i) * y[j];
    y[i] = acc / lu_(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = y[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= lu_(j, i) * y[j];
    y[i] = acc;
  }
  for (std::size_t i = 0; i < n; ++i) b[perm_[i]] = y[i];
}

double LuFactorization::estimate_inverse_norm1() const {
  const std::size_t n = lu_.rows();
  Vector x(n, 1.0 / static_cast<double>(n));
  double estimate = 0.0;
  constexpr int kMaxIterations = 5;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    solve_in_place(x);
    double norm = 0.0;
    for (double v : x) norm += std::fabs(v);
    if (!std::isfinite(norm)) return std::numeric_limits<double>::infinity();
    if (iter > 0 && norm <= estimate) break;
    estimate = norm;
    Vector xi(n);
    for (std::size_t i = 0; i < n; ++i) xi[i] = x[i] >= 0 ? 1.0 : -1.0;
    solve_transposed_in_place(xi);
    std::size_t jmax = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::fabs(xi[i]) > std::fabs(xi[jmax])) jmax = i;
    }
    std::fill(x.begin(), x.end(), 0.0);
    x[jmax] = 1.0;
  }
  return estimate;
}

}  // namespace fracgen
