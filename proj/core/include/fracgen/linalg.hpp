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
#ifndef FRACGEN_LINALG_HPP
#define FRACGEN_LINALG_HPP

// Minimal dense linear algebra: row-major matrices and an LU factorization
// with partial pivoting. Sized for desk-scale grids (a few thousand rows).

#include <cstddef>
#include <span>
#include <vector>

namespace fracgen {

using Vector = std::vector<double>;

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  DenseMatrix transposed() const;
  /// Rows [first, first + count) and the same column range.
  DenseMatrix principal_block(std::size_t first, std::size_t count) const;
  Vector column(std::size_t j) const;

  Vector operator*(std::span<const double> x) const;
  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double s);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(double s, DenseMatrix a) { return a *= s; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  bool is_symmetric(double tol = 0.0) const;
  double norm1() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// x^T A x.
double quadratic_form(const DenseMatrix& a, std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double max_abs(std::span<const double> x);

/// PA = LU with partial pivoting. Construction throws SolverFailure when a
/// pivot is exactly zero or the reciprocal 1-norm condition estimate falls
/// below kMinReciprocalCondition.
class LuFactorization {
 public:
  static constexpr double kMinReciprocalCondition = 1e-14;

  explicit LuFactorization(DenseMatrix a);

  std::size_t size() const { return lu_.rows(); }
  Vector solve(std::span<const double> b) const;
  void solve_in_place(std::span<double> b) const;
  /// Hager-Higham estimate of 1 / (||A||_1 ||A^{-1}||_1).
  double reciprocal_condition() const { return rcond_; }

 private:
  void solve_transposed_in_place(std::span<double> b) const;
  double estimate_inverse_norm1() const;

  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
  double rcond_ = 0;
};

}  // namespace fracgen

#endif  // FRACGEN_LINALG_HPP
