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
#ifndef FRACGEN_GENERATORS_HPP
#define FRACGEN_GENERATORS_HPP

// Polynomial-power generating functions W(z) = (beta_0 + ... + beta_p z^p)^alpha
// and the Grunwald-type weight sequences they produce.

#include <string>
#include <vector>

#include "fracgen/rational.hpp"

namespace fracgen {

/// A generator of design order `order` with shift `shift`. The shift is an
/// integer for grid solvers; analysis accepts real shifts (e.g. alpha / 2).
template <Scalar T>
struct BasicGenerator {
  T alpha;
  int order = 1;
  T shift;
  std::vector<T> beta;  // beta_0 .. beta_p

  /// Throws ConsistencyError unless sum(beta) = 0 and DomainError unless beta_0 > 0.
  void validate() const;
};

using GeneratorSpec = BasicGenerator<double>;
using ExactGenerator = BasicGenerator<Rational>;

GeneratorSpec to_floating(const ExactGenerator& g);

inline constexpr int kMinGeneratorOrder = 1;
inline constexpr int kMaxGeneratorOrder = 6;

/// Closed-form coefficients of the order-p, shift-r generator as polynomials
/// in r / alpha. At r = 0 these are the Lubich generators.
template <Scalar T>
BasicGenerator<T> beta_table(int p, const T& shift, const T& alpha);

/// Builds beta by solving the linear order conditions directly:
///   [z^0] P(e^{-z}) e^{r z / alpha} / z = 1,
///   [z^l] P(e^{-z}) e^{r z / alpha} / z = 0 for 1 <= l < p,
///   sum_k beta_k = 0.
/// This is independent of beta_table and serves as its oracle.
template <Scalar T>
BasicGenerator<T> construct_beta(int p, const T& shift, const T& alpha);

/// L_p(z) = (sum_{j=1..p} (1-z)^j / j)^alpha, zero shift.
template <Scalar T>
BasicGenerator<T> lubich_generator(int p, const T& alpha);

/// Same beta, different shift (used to show that shifting Lubich generators
/// degrades them to first order).
template <Scalar T>
BasicGenerator<T> with_shift(BasicGenerator<T> g, const T& shift) {
  g.shift = shift;
  return g;
}

struct WeightSequence {
  std::vector<double> weights;  // w_0 .. w_K
  double alpha = 0;
  double shift = 0;
  GeneratorSpec source;

  std::size_t size() const { return weights.size(); }
  double operator[](std::size_t k) const { return weights[k]; }
};

/// Taylor coefficients w_0..w_K of W(z), from
///   w_0 = beta_0^alpha,
///   w_m = 1/(m beta_0) sum_{k=1..min(m,p)} (k (alpha + 1) - m) beta_k w_{m-k}.
WeightSequence grunwald_weights(const GeneratorSpec& g, int max_index);

/// Default weight count used by analysis routines.
inline constexpr int kDefaultAnalysisWeights = 2000;

struct OrderReport {
  int expected_order = 0;
  /// Index of the first nonzero a_l with l >= 1; truncation_order + 1 when
  /// every computed coefficient vanishes.
  int observed_order = 0;
  double leading_coeff = 0;
  bool exact = false;
  std::vector<double> coefficients;  // a_0 .. a_L

  bool passed() const { return observed_order >= expected_order; }
};

/// Threshold below which a floating symbol coefficient counts as zero,
/// relative to max(1, |a_0|).
inline constexpr double kFloatingZeroThreshold = 1e-10;

/// Expands G_r(z) to order expected_p + 3 and reads off the order. Exact
/// generators are decided with exact zero tests.
template <Scalar T>
OrderReport verify_order(const BasicGenerator<T>& g, int expected_p);

/// a_2(r) of the order-2 generator: -alpha/3 + r - r^2 / (2 alpha).
template <Scalar T>
T a2_coefficient(const T& shift, const T& alpha) {
  if (alpha == 0) throw DomainError("alpha must be nonzero");
  return -alpha / T(3) + shift - shift * shift / (T(2) * alpha);
}

/// lambda_1 delta_{p} + lambda_2 delta_{q} built from the first-order
/// Grunwald symbol with shifts p and q; expected to be second order.
template <Scalar T>
OrderReport convex_combination_check(int p_shift, int q_shift, const T& alpha);

/// -alpha^2/8 + alpha p/4 + alpha q/4 + alpha/24 - p q/2.
template <Scalar T>
T convex_combination_leading_coefficient(int p_shift, int q_shift, const T& alpha) {
  const T p(p_shift), q(q_shift);
  return -alpha * alpha / T(8) + alpha * p / T(4) + alpha * q / T(4) + alpha / T(24) -
         p * q / T(2);
}

std::string describe(const GeneratorSpec& g);

}  // namespace fracgen

#endif  // FRACGEN_GENERATORS_HPP
