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
#ifndef FRACGEN_STEADY_HPP
#define FRACGEN_STEADY_HPP

// Steady one-sided fractional problem  _aD_x^alpha u = f on [a, b],
// u(a) = phi0, u(b) = phi1, solved with the W_{2,1} operator (order 2) or the
// same operator with the tridiagonal preconditioner on the right-hand side
// (quasi-compact, order 3).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracgen/generators.hpp"
#include "fracgen/linalg.hpp"
#include "fracgen/operators.hpp"

namespace fracgen {

enum class Scheme { order2, order3 };

std::string to_string(Scheme s);
Scheme parse_scheme(const std::string& text);

struct SteadyProblem {
  double a = 0;
  double b = 1;
  double alpha = 1.5;
  std::function<double(double)> source;
  double phi0 = 0;
  double phi1 = 0;
  std::function<double(double)> exact;  // may be empty

  /// alpha in (1, 2], a < b, source present.
  void validate() const;
};

/// 10 x^n on [0, 1] with source 10 Gamma(n+1)/Gamma(n+1-alpha) x^{n-alpha},
/// u(0) = 0, u(1) = 10.
SteadyProblem power_steady_problem(double alpha, int n = 8);

/// Returns U_0..U_N with U_0 = phi0, U_N = phi1.
Vector solve_steady(const SteadyProblem& problem, const GridSpec& grid, Scheme scheme);

/// Order-p solve with an arbitrary generator (integer shift) and no
/// preconditioning; used by the stability scan. Does not restrict alpha.
Vector solve_steady_with_generator(const SteadyProblem& problem, const GridSpec& grid,
                                   const GeneratorSpec& generator, double a2 = 0.0);

/// max_i |U_i - exact(x_i)|.
double max_error(std::span<const double> solution, const GridSpec& grid,
                 const std::function<double(double)>& exact);

struct StabilityPoint {
  double alpha = 0;
  double max_rayleigh = 0;   // largest sampled v^T A v / |v|^2 of the reduced matrix
  bool solve_checked = false;
  bool solve_ok = false;
  double max_error = 0;
  double baseline_error = 0;  // same scheme at N = 16
  bool stable = false;
  std::string note;
};

struct StabilityReport {
  int order = 0;
  int shift = 0;
  int intervals = 0;
  std::vector<StabilityPoint> points;

  bool all_stable() const;
  /// Smallest grid alpha from which every larger grid alpha is stable.
  std::optional<double> stable_from() const;
};

inline constexpr int kStabilityRayleighSamples = 500;
inline constexpr double kStabilityRayleighSlack = 1e-8;
inline constexpr double kStabilityErrorBlowup = 10.0;
inline constexpr int kStabilityBaselineIntervals = 16;

/// For each alpha: samples Rayleigh quotients of the reduced A_{p,r} and solves
/// the power steady problem with the order-p scheme. Alpha is flagged
/// unstable when a quotient exceeds +1e-8, or the solve fails, or its error
/// exceeds 10x the N = 16 error.
StabilityReport stability_scan(int p, int r, std::span<const double> alpha_grid,
                               const GridSpec& grid, std::uint64_t seed = 2017);

}  // namespace fracgen

#endif  // FRACGEN_STEADY_HPP
