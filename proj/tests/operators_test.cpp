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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fracgen/errors.hpp"
#include "fracgen/generators.hpp"
#include "fracgen/steady.hpp"

namespace fracgen {
namespace {

WeightSequence weights_for(int p, int r, double alpha, const GridSpec& grid) {
  return grunwald_weights(beta_table<double>(p, double(r), alpha), required_weight_index(grid, r));
}

TEST(GridSpecTest, Nodes) {
  const GridSpec g(-1.0, 1.0, 4);
  EXPECT_DOUBLE_EQ(g.h(), 0.5);
  EXPECT_EQ(g.points(), 5u);
  EXPECT_DOUBLE_EQ(g.x(3), 0.5);
  EXPECT_THROW(GridSpec(0.0, 1.0, 1), UsageError);
  EXPECT_THROW(GridSpec(1.0, 0.0, 8), UsageError);
}

TEST(IntegerShiftTest, RejectsFractionalShift) {
  EXPECT_EQ(integer_shift(1.0), 1);
  EXPECT_THROW(integer_shift(0.75), UsageError);
  EXPECT_THROW(integer_shift(-1.0), UsageError);
}

TEST(ApplyGrunwaldTest, ZeroInZeroOut) {
  const GridSpec grid(0.0, 1.0, 10);
  const auto v = apply_grunwald(Vector(grid.points(), 0.0), weights_for(2, 1, 1.5, grid), grid,
                                Side::left);
  for (double x : v) EXPECT_EQ(x, 0.0);
}

TEST(ApplyGrunwaldTest, FirstOrderAlphaOneIsBackwardDifference) {
  const GridSpec grid(0.0, 1.0, 8);
  const GeneratorSpec g{1.0, 1, 0.0, {1.0, -1.0}};
  const auto w = grunwald_weights(g, grid.intervals());
  Vector u(grid.points());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::sin(3.0 * grid.x(int(i)));
  const auto v = apply_grunwald(u, w, grid, Side::left);
  EXPECT_NEAR(v[0], u[0] / grid.h(), 1e-12);
  for (std::size_t i = 1; i < u.size(); ++i) {
    EXPECT_NEAR(v[i], (u[i] - u[i - 1]) / grid.h(), 1e-12);
  }
}

TEST(ApplyGrunwaldTest, TooFewWeights) {
  const GridSpec grid(0.0, 1.0, 8);
  const auto w = grunwald_weights(beta_table<double>(2, 1.0, 1.5), 5);
  EXPECT_THROW(apply_grunwald(Vector(grid.points(), 1.0), w, grid, Side::left), UsageError);
}

TEST(ApplyGrunwaldTest, ConstantFunctionVanishesAwayFromBoundary) {
  // With the zero extension the left sum at node i only covers w_0..w_{i+1};
  // its size is the partial sum, which decays as i grows.
  const GridSpec grid(0.0, 1.0, 2000);
  const auto w = weights_for(2, 1, 1.5, grid);
  const auto v = apply_grunwald(Vector(grid.points(), 1.0), w, grid, Side::left);
  const double scale = std::pow(grid.h(), -1.5);
  EXPECT_LT(std::abs(v[1999]) / scale, 1e-3);
  EXPECT_LT(std::abs(v[1999]), std::abs(v[100]));
}

TEST(ApplyGrunwaldTest, PowerFunctionMatchesSource) {
  const auto problem = power_steady_problem(1.5);
  const GridSpec grid(0.0, 1.0, 1024);
  const auto w = weights_for(2, 1, 1.5, grid);
  Vector u(grid.points());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = problem.exact(grid.x(int(i)));
  const auto v = apply_grunwald(u, w, grid, Side::left);
  double worst = 0;
  for (int i = 1; i < grid.intervals(); ++i) {
    worst = std::max(worst, std::abs(v[i] - problem.source(grid.x(i))));
  }
  // Truncation error is O(h^2) with a constant of order 10^2 for this source.
  EXPECT_LT(worst, 1e-2);
  EXPECT_GT(worst, 1e-6);
}

TEST(FracMatrixTest, FirstOrderBidiagonal) {
  const GridSpec grid(0.0, 1.0, 2);
  const GeneratorSpec g{1.0, 1, 0.0, {1.0, -1.0}};
  const auto a = assemble_frac_matrix(grunwald_weights(g, 2), grid, Side::left).dense();
  const double ih = 1.0 / grid.h();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const double want = i == j ? ih : (i == j + 1 ? -ih : 0.0);
      EXPECT_DOUBLE_EQ(a(i, j), want) << i << "," << j;
    }
  }
}

TEST(FracMatrixTest, ShiftedSecondOrderIndexing) {
  const GridSpec grid(0.0, 1.0, 3);
  const auto w = weights_for(2, 1, 1.5, grid);
  const auto a = assemble_frac_matrix(w, grid, Side::left);
  const double s = std::pow(grid.h(), -1.5);
  EXPECT_DOUBLE_EQ(a(0, 0), w[1] * s);
  EXPECT_DOUBLE_EQ(a(0, 1), w[0] * s);
  EXPECT_EQ(a(0, 2), 0.0);
  EXPECT_EQ(a(0, 3), 0.0);
  EXPECT_DOUBLE_EQ(a(3, 0), w[4] * s);
  EXPECT_DOUBLE_EQ(a(2, 1), w[2] * s);
  EXPECT_EQ(a(1, 3), 0.0);
}

TEST(FracMatrixTest, RightSideIsTranspose) {
  const GridSpec grid(0.0, 1.0, 9);
  const auto w = weights_for(3, 1, 1.7, grid);
  const auto left = assemble_frac_matrix(w, grid, Side::left).dense();
  const auto right = assemble_frac_matrix(w, grid, Side::right).dense();
  EXPECT_EQ(left.transposed(), right);
}

TEST(FracMatrixTest, MatrixMatchesOperator) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> dist;
  for (Side side : {Side::left, Side::right}) {
    const GridSpec grid(0.0, 2.0, 50);
    const auto w = weights_for(4, 1, 1.3, grid);
    Vector u(grid.points());
    for (auto& x : u) x = dist(rng);
    const auto m = assemble_frac_matrix(w, grid, side);
    const auto via_dense = m.dense() * u;
    const auto via_apply = m.apply(u);
    const auto direct = apply_grunwald(u, w, grid, side);
    for (std::size_t i = 0; i < u.size(); ++i) {
      EXPECT_NEAR(via_dense[i], direct[i], 1e-13 * std::max(1.0, max_abs(direct)));
      EXPECT_NEAR(via_apply[i], direct[i], 1e-13 * std::max(1.0, max_abs(direct)));
    }
  }
}

TEST(PreconditionerTest, ZeroIsIdentity) {
  const GridSpec grid(0.0, 1.0, 6);
  EXPECT_EQ(assemble_preconditioner(0.0, grid).dense(), DenseMatrix::identity(7));
}

TEST(PreconditionerTest, InteriorRowSums) {
  const GridSpec grid(0.0, 1.0, 6);
  const auto p = assemble_preconditioner(1.0 / 12.0, grid).dense();
  for (std::size_t i = 1; i + 1 < p.rows(); ++i) {
    double sum = 0;
    for (std::size_t j = 0; j < p.cols(); ++j) sum += p(i, j);
    EXPECT_NEAR(sum, 1.0, 1e-15);
  }
  EXPECT_TRUE(p.is_symmetric());
}

TEST(PreconditionerTest, CompactStencilAtAlphaTwo) {
  const GridSpec grid(0.0, 1.0, 6);
  const auto p = assemble_preconditioner(a2_coefficient(1.0, 2.0), grid);
  EXPECT_DOUBLE_EQ(p(3, 2), 1.0 / 12.0);
  EXPECT_DOUBLE_EQ(p(3, 3), 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(p(3, 4), 1.0 / 12.0);
  EXPECT_EQ(p(3, 5), 0.0);
}

TEST(ReduceSystemTest, HomogeneousBoundary) {
  DenseMatrix a(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) a(i, j) = double(i * 5 + j);
  }
  const Vector rhs = {1, 2, 3, 4, 5};
  const auto r = reduce_system(a, rhs, 0.0, 0.0);
  EXPECT_EQ(r.rhs, (Vector{2, 3, 4}));
  EXPECT_EQ(r.matrix, a.principal_block(1, 3));
}

TEST(ReduceSystemTest, BoundaryColumnsMoveToRhs) {
  DenseMatrix a = DenseMatrix::identity(4);
  a(1, 0) = 2.0;
  a(2, 3) = -3.0;
  const Vector rhs = {0, 1, 1, 0};
  const auto r = reduce_system(a, rhs, 1.0, 2.0);
  EXPECT_EQ(r.rhs, (Vector{1 - 2.0 * 1.0, 1 - (-3.0) * 2.0}));
  const auto id = reduce_system(DenseMatrix::identity(4), rhs, 1.0, 0.0);
  EXPECT_EQ(id.rhs, (Vector{1, 1}));
}

TEST(ReduceSystemTest, NeedsInteriorPoints) {
  EXPECT_THROW(reduce_system(DenseMatrix::identity(2), Vector{0, 0}, 0, 0), UsageError);
}

TEST(DiscreteInnerTest, Weighted) {
  EXPECT_DOUBLE_EQ(discrete_inner(Vector{1, 2}, Vector{3, 4}, 0.5), 5.5);
  EXPECT_DOUBLE_EQ(discrete_norm(Vector{3, 4}, 1.0), 5.0);
}

}  // namespace
}  // namespace fracgen
