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
#include "fracgen/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fracgen/errors.hpp"

namespace fracgen {

GridSpec::GridSpec(double a, double b, int intervals) : a_(a), b_(b), n_(intervals) {
  if (intervals < 2) throw UsageError("grid needs N >= 2 intervals");
  if (!(b > a)) throw UsageError("grid needs b > a");
  h_ = (b - a) / intervals;
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> x(points());
  for (int i = 0; i <= n_; ++i) x[static_cast<std::size_t>(i)] = this->x(i);
  x.back() = b_;
  return x;
}

int integer_shift(double shift) {
  const double rounded = std::round(shift);
  if (rounded != shift || shift < 0) {
    throw UsageError("grid operators need a non-negative integer shift, got " +
                     std::to_string(shift));
  }
  return static_cast<int>(rounded);
}

namespace {

void require_weights(const WeightSequence& w, const GridSpec& grid, int shift) {
  const int need = required_weight_index(grid, shift);
  if (static_cast<int>(w.size()) < need + 1) {
    throw UsageError("operator on N=" + std::to_string(grid.intervals()) + " with shift " +
                     std::to_string(shift) + " needs weights w_0..w_" + std::to_string(need) +
                     ", got " + std::to_string(w.size()));
  }
}

}  // namespace

Vector apply_grunwald(std::span<const double> u, const WeightSequence& w, const GridSpec& grid,
                      Side side) {
  const int r = integer_shift(w.shift);
  const int n = grid.intervals();
  if (u.size() != grid.points()) throw UsageError("grid function has wrong length");
  require_weights(w, grid, r);
  const double scale = std::pow(grid.h(), -w.alpha);
  Vector v(u.size(), 0.0);
  for (int i = 0; i <= n; ++i) {
    double acc = 0.0;
    if (side == Side::left) {
      // j = i - k + r in [0, N]
      for (int k = std::max(0, i + r - n); k <= i + r; ++k) {
        acc += w[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(i - k + r)];
      }
    } else {
      // j = i + k - r in [0, N]
      for (int k = std::max(0, r - i); k <= n - i + r; ++k) {
        acc += w[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(i + k - r)];
      }
    }
    v[static_cast<std::size_t>(i)] = scale * acc;
  }
  return v;
}

FracOperatorMatrix::FracOperatorMatrix(std::vector<double> weights, int shift, Side side,
                                       double scale, std::size_t size)
    : weights_(std::move(weights)), shift_(shift), side_(side), scale_(scale), size_(size) {
  if (size_ == 0) throw UsageError("empty operator matrix");
  if (weights_.size() < size_ + static_cast<std::size_t>(shift_)) {
    throw UsageError("too few weights for operator matrix");
  }
}

double FracOperatorMatrix::operator()(std::size_t i, std::size_t j) const {
  if (side_ == Side::right) std::swap(i, j);
  const long k = static_cast<long>(i) - static_cast<long>(j) + shift_;
  return k >= 0 ? scale_ * weights_[static_cast<std::size_t>(k)] : 0.0;
}

DenseMatrix FracOperatorMatrix::dense() const {
  DenseMatrix m(size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

Vector FracOperatorMatrix::apply(std::span<const double> u) const {
  if (u.size() != size_) throw UsageError("operator applied to wrong-length vector");
  Vector v(size_, 0.0);
  for (std::size_t i = 0; i < size_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < size_; ++j) acc += (*this)(i, j) * u[j];
    v[i] = acc;
  }
  return v;
}

FracOperatorMatrix FracOperatorMatrix::transposed() const {
  return FracOperatorMatrix(weights_, shift_, side_ == Side::left ? Side::right : Side::left,
                            scale_, size_);
}

FracOperatorMatrix assemble_frac_matrix(const WeightSequence& w, const GridSpec& grid,
                                        Side side) {
  const int r = integer_shift(w.shift);
  require_weights(w, grid, r);
  std::vector<double> weights(w.weights.begin(),
                              w.weights.begin() + required_weight_index(grid, r) + 1);
  return FracOperatorMatrix(std::move(weights), r, side, std::pow(grid.h(), -w.alpha),
                            grid.points());
}

Preconditioner::Preconditioner(double a2, std::size_t size) : a2_(a2), size_(size) {
  if (size_ == 0) throw UsageError("empty preconditioner");
}

double Preconditioner::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return 1.0 - 2.0 * a2_;
  if (i + 1 == j || j + 1 == i) return a2_;
  return 0.0;
}

DenseMatrix Preconditioner::dense() const {
  DenseMatrix m(size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    m(i, i) = 1.0 - 2.0 * a2_;
    if (i > 0) m(i, i - 1) = a2_;
    if (i + 1 < size_) m(i, i + 1) = a2_;
  }
  return m;
}

Vector Preconditioner::apply(std::span<const double> u) const {
  if (u.size() != size_) throw UsageError("preconditioner applied to wrong-length vector");
  Vector v(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    double acc = (1.0 - 2.0 * a2_) * u[i];
    if (i > 0) acc += a2_ * u[i - 1];
    if (i + 1 < size_) acc += a2_ * u[i + 1];
    v[i] = acc;
  }
  return v;
}

Preconditioner assemble_preconditioner(double a2, const GridSpec& grid) {
  return Preconditioner(a2, grid.points());
}

ReducedSystem reduce_system(const DenseMatrix& a, std::span<const double> rhs, double phi0,
                            double phi1) {
  const std::size_t n1 = a.rows();
  if (a.cols() != n1) throw UsageError("reduce_system needs a square matrix");
  if (rhs.size() != n1) throw UsageError("reduce_system rhs size mismatch");
  if (n1 < 3) throw UsageError("reduce_system needs N >= 2 (at least one interior point)");
  const std::size_t m = n1 - 2;
  ReducedSystem out{a.principal_block(1, m), Vector(m)};
  for (std::size_t i = 0; i < m; ++i) {
    out.rhs[i] = rhs[i + 1] - a(i + 1, 0) * phi0 - a(i + 1, n1 - 1) * phi1;
  }
  return out;
}

double discrete_inner(std::span<const double> u, std::span<const double> v, double h) {
  return h * dot(u, v);
}

double discrete_norm(std::span<const double> u, double h) {
  return std::sqrt(discrete_inner(u, u, h));
}

}  // namespace fracgen
