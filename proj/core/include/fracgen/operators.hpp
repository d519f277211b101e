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
#ifndef FRACGEN_OPERATORS_HPP
#define FRACGEN_OPERATORS_HPP

// Discrete fractional operators on uniform grids: shifted Grunwald sums,
// their Toeplitz matrices, the tridiagonal quasi-compact preconditioner and
// Dirichlet boundary reduction.

#include <span>
#include <vector>

#include "fracgen/generators.hpp"
#include "fracgen/linalg.hpp"

namespace fracgen {

/// Uniform grid x_i = a + i h, h = (b - a) / N, 0 <= i <= N.
class GridSpec {
 public:
  GridSpec(double a, double b, int intervals);

  double a() const { return a_; }
  double b() const { return b_; }
  int intervals() const { return n_; }
  std::size_t points() const { return static_cast<std::size_t>(n_) + 1; }
  double h() const { return h_; }
  double x(int i) const { return a_ + i * h_; }
  std::vector<double> nodes() const;

 private:
  double a_;
  double b_;
  int n_;
  double h_;
};

enum class Side { left, right };

/// The shift as a grid offset; grid operators only accept integer shifts >= 0.
int integer_shift(double shift);

/// Number of weights (w_0..w_{N+r}) a grid operator needs.
inline int required_weight_index(const GridSpec& grid, int shift) {
  return grid.intervals() + shift;
}

/// v_i = h^{-alpha} sum_k w_k u_{i-k+r} (left) or h^{-alpha} sum_k w_k u_{i+k-r}
/// (right), with u zero-extended outside 0..N.
Vector apply_grunwald(std::span<const double> u, const WeightSequence& w, const GridSpec& grid,
                      Side side);

/// Toeplitz matrix of the shifted Grunwald operator. Left: entry (i, j) is
/// h^{-alpha} w_{i-j+r} for i - j + r >= 0, else 0. Right is the transpose.
class FracOperatorMatrix {
 public:
  FracOperatorMatrix(std::vector<double> weights, int shift, Side side, double scale,
                     std::size_t size);

  std::size_t size() const { return size_; }
  int shift() const { return shift_; }
  Side side() const { return side_; }
  double scale() const { return scale_; }
  std::span<const double> weights() const { return weights_; }

  double operator()(std::size_t i, std::size_t j) const;
  DenseMatrix dense() const;
  Vector apply(std::span<const double> u) const;
  FracOperatorMatrix transposed() const;

 private:
  std::vector<double> weights_;
  int shift_;
  Side side_;
  double scale_;
  std::size_t size_;
};

FracOperatorMatrix assemble_frac_matrix(const WeightSequence& w, const GridSpec& grid, Side side);

/// Tridiagonal (a2, 1 - 2 a2, a2) stencil of I + a2 h^2 delta_h^2 with
/// delta_h^2 u_i = (u_{i-1} - 2 u_i + u_{i+1}) / h^2, zero-extended at the ends.
class Preconditioner {
 public:
  Preconditioner(double a2, std::size_t size);

  double a2() const { return a2_; }
  std::size_t size() const { return size_; }
  double operator()(std::size_t i, std::size_t j) const;
  DenseMatrix dense() const;
  Vector apply(std::span<const double> u) const;

 private:
  double a2_;
  std::size_t size_;
};

Preconditioner assemble_preconditioner(double a2, const GridSpec& grid);

struct ReducedSystem {
  DenseMatrix matrix;  // (N-1) x (N-1)
  Vector rhs;          // N-1
};

/// Drops the first/last rows and columns and moves the boundary columns,
/// scaled by phi0 and phi1, to the right-hand side.
ReducedSystem reduce_system(const DenseMatrix& a, std::span<const double> rhs, double phi0,
                            double phi1);

/// (u, v) = h sum u_i v_i over the entries given.
double discrete_inner(std::span<const double> u, std::span<const double> v, double h);
double discrete_norm(std::span<const double> u, double h);

}  // namespace fracgen

#endif  // FRACGEN_OPERATORS_HPP
