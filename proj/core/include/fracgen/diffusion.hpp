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
#ifndef FRACGEN_DIFFUSION_HPP
#define FRACGEN_DIFFUSION_HPP

// Crank-Nicolson stepping for
//   u_t = K1 _aD_x^alpha u + K2 _xD_b^alpha u + f(x, t)
// with the W_{2,1} operator (order 2 in space) or the same operator with the
// quasi-compact preconditioner P (order 3 in space):
//   (P - B) U^{m+1} = (P + B) U^m + tau P F^{m+1/2},
//   B = tau/2 (K1 A + K2 A^T).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fracgen/linalg.hpp"
#include "fracgen/operators.hpp"
#include "fracgen/steady.hpp"

namespace fracgen {

struct DiffusionProblem {
  double a = 0;
  double b = 1;
  double final_time = 1;
  double alpha = 1.5;
  double k1 = 1;
  double k2 = 1;
  std::function<double(double, double)> source;  // f(x, t)
  std::function<double(double)> initial;          // s_0(x)
  std::function<double(double)> left_boundary;    // phi_1(t)
  std::function<double(double)> right_boundary;   // phi_2(t)
  std::function<double(double, double)> exact;    // may be empty

  /// alpha in (1, 2]; K1, K2 >= 0 and not both zero; a < b; T > 0. The
  /// boundary convention (phi_1 = 0 when K1 != 0, phi_2 = 0 when K2 != 0) is
  /// checked by sampling the boundary functions on [0, T].
  void validate() const;
};

/// G(x, m, alpha) = Gamma(m+1)/Gamma(m+1-alpha) (x^{m-alpha} + (1-x)^{m-alpha}).
double fractional_poly_source(double x, int m, double alpha);

/// Source for u = x^5 (1-x)^5 e^{-t} with K1 = K2 = 1:
/// -e^{-t} (s_0 + G5 - 5 G6 + 10 G7 - 10 G8 + 5 G9 - G10).
double polynomial_diffusion_source(double x, double t, double alpha);

/// u = x^5 (1-x)^5 e^{-t} on [0,1] x [0,1], homogeneous Dirichlet data.
DiffusionProblem polynomial_diffusion_problem(double alpha, double k1 = 1.0, double k2 = 1.0);

/// Time-independent matrices of one Crank-Nicolson run, with the reduced
/// left matrix factored once.
class CrankNicolson {
 public:
  CrankNicolson(const DiffusionProblem& problem, const GridSpec& grid, int steps, Scheme scheme);

  double tau() const { return tau_; }
  int steps() const { return steps_; }
  const GridSpec& grid() const { return grid_; }

  /// Full (N+1)-sized matrices.
  const DenseMatrix& preconditioner() const { return p_; }
  const DenseMatrix& operator_b() const { return b_; }
  DenseMatrix left_matrix() const { return p_ - b_; }
  DenseMatrix right_matrix() const { return p_ + b_; }
  /// Interior (N-1)-sized blocks.
  const DenseMatrix& reduced_right() const { return right_hat_; }
  DenseMatrix reduced_left() const { return left_matrix().principal_block(1, interior()); }

  Vector initial_state() const;
  /// U^{m+1} from U^m (full grid vectors including boundary values).
  Vector step(std::span<const double> current, int m) const;
  /// Homogeneous-boundary step on interior values with an unpreconditioned
  /// source: (P^ - B^) v' = (P^ + B^) v + tau S.
  Vector step_interior(std::span<const double> v, std::span<const double> s) const;

 private:
  std::size_t interior() const { return grid_.points() - 2; }

  DiffusionProblem problem_;
  GridSpec grid_;
  int steps_;
  double tau_;
  DenseMatrix p_;
  DenseMatrix b_;
  DenseMatrix right_;
  DenseMatrix right_hat_;
  std::optional<LuFactorization> left_lu_;
};

struct Trajectory {
  double tau = 0;
  std::vector<Vector> rows;  // M + 1 rows of N + 1 values
};

Trajectory cn_solve(const DiffusionProblem& problem, const GridSpec& grid, int steps,
                    Scheme scheme);

/// Only U^M, without storing the trajectory.
Vector cn_final(const DiffusionProblem& problem, const GridSpec& grid, int steps, Scheme scheme);

/// max_i |u(x_i, T) - U_i^M|.
double final_max_error(const DiffusionProblem& problem, const GridSpec& grid,
                       std::span<const double> final_state);

struct StabilityEstimateOptions {
  std::uint64_t seed = 7;
  double initial_amplitude = 1.0;  // 0 gives v^0 = 0
  double source_amplitude = 1.0;   // 0 gives S = 0
};

struct StabilityEstimateReport {
  bool passed = true;
  std::vector<double> norms;   // ||v^m||, m = 0..M
  std::vector<double> bounds;  // right-hand side of the estimate
  double worst_ratio = 0;      // max ||v^m|| / bound
};

/// Relative slack on the stability bound for round-off.
inline constexpr double kStabilityBoundSlack = 1e-12;

/// Perturbation run with homogeneous boundary data: random v^0 and S^m,
/// checked against ||v^m|| <= sqrt5 (||v^0|| + sqrt5 tau sum ||S^l||) for the
/// order-3 scheme and ||v^m|| <= ||v^0|| + tau sum ||S^l|| for order 2.
StabilityEstimateReport stability_estimate_check(const DiffusionProblem& problem,
                                                 const GridSpec& grid, int steps, Scheme scheme,
                                                 const StabilityEstimateOptions& options = {});

}  // namespace fracgen

#endif  // FRACGEN_DIFFUSION_HPP
