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
#include "fracgen/diffusion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "fracgen/errors.hpp"
#include "fracgen/generators.hpp"

namespace fracgen {

void DiffusionProblem::validate() const {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw DomainError("diffusion problem needs alpha in (1, 2], got " + std::to_string(alpha));
  }
  if (k1 < 0 || k2 < 0) throw DomainError("diffusion coefficients must be non-negative");
  if (k1 + k2 == 0) throw DomainError("K1 + K2 must be nonzero");
  if (!(b > a)) throw UsageError("diffusion problem needs a < b");
  if (!(final_time > 0)) throw UsageError("diffusion problem needs T > 0");
  if (!source || !initial || !left_boundary || !right_boundary) {
    throw UsageError("diffusion problem is missing source, initial or boundary data");
  }
  constexpr int kSamples = 16;
  for (int s = 0; s <= kSamples; ++s) {
    const double t = final_time * s / kSamples;
    if (k1 != 0 && left_boundary(t) != 0) {
      throw DomainError("K1 != 0 requires a homogeneous left boundary");
    }
    if (k2 != 0 && right_boundary(t) != 0) {
      throw DomainError("K2 != 0 requires a homogeneous right boundary");
    }
  }
}

double fractional_poly_source(double x, int m, double alpha) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("fractional_poly_source needs x in [0, 1], got " + std::to_string(x));
  }
  if (!(m >= 2 && m > alpha)) throw DomainError("fractional_poly_source needs m >= 2 > alpha");
  const double c = std::tgamma(m + 1.0) / std::tgamma(m + 1.0 - alpha);
  return c * (std::pow(x, m - alpha) + std::pow(1.0 - x, m - alpha));
}

namespace {

double s0(double x) { return std::pow(x, 5) * std::pow(1.0 - x, 5); }

// x^5 (1-x)^5 = x^5 - 5x^6 + 10x^7 - 10x^8 + 5x^9 - x^10
constexpr int kExpansionPowers[] = {5, 6, 7, 8, 9, 10};
constexpr double kExpansionCoeffs[] = {1, -5, 10, -10, 5, -1};

}  // namespace

double polynomial_diffusion_source(double x, double t, double alpha) {
  double sum = s0(x);
  for (int i = 0; i < 6; ++i) {
    sum += kExpansionCoeffs[i] * fractional_poly_source(x, kExpansionPowers[i], alpha);
  }
  return -std::exp(-t) * sum;
}

DiffusionProblem polynomial_diffusion_problem(double alpha, double k1, double k2) {
  DiffusionProblem p;
  p.alpha = alpha;
  p.k1 = k1;
  p.k2 = k2;
  std::array<double, 6> scale{};
  for (int i = 0; i < 6; ++i) {
    const int m = kExpansionPowers[i];
    scale[i] = kExpansionCoeffs[i] * std::tgamma(m + 1.0) / std::tgamma(m + 1.0 - alpha);
  }
  p.source = [alpha, k1, k2, scale](double x, double t) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("source evaluated outside [0, 1]");
    double frac = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double e = kExpansionPowers[i] - alpha;
      frac += scale[i] * (k1 * std::pow(x, e) + k2 * std::pow(1.0 - x, e));
    }
    return -std::exp(-t) * (s0(x) + frac);
  };
  p.initial = s0;
  p.left_boundary = [](double) { return 0.0; };
  p.right_boundary = [](double) { return 0.0; };
  p.exact = [](double x, double t) { return s0(x) * std::exp(-t); };
  return p;
}

CrankNicolson::CrankNicolson(const DiffusionProblem& problem, const GridSpec& grid, int steps,
                             Scheme scheme)
    : problem_(problem), grid_(grid), steps_(steps) {
  problem_.validate();
  if (steps < 1) throw UsageError("Crank-Nicolson needs at least one time step");
  tau_ = problem_.final_time / steps;

  const auto g = beta_table<double>(2, 1.0, problem_.alpha);
  const auto w = grunwald_weights(g, required_weight_index(grid_, 1));
  const DenseMatrix a = assemble_frac_matrix(w, grid_, Side::left).dense();
  b_ = problem_.k1 * a;
  if (problem_.k2 != 0) b_ += problem_.k2 * a.transposed();
  b_ *= tau_ / 2.0;

  const double a2 = scheme == Scheme::order3 ? a2_coefficient(1.0, problem_.alpha) : 0.0;
  p_ = Preconditioner(a2, grid_.points()).dense();

  right_ = p_ + b_;
  right_hat_ = right_.principal_block(1, interior());
  try {
    left_lu_.emplace(reduced_left());
  } catch (const SolverFailure& e) {
    throw SolverFailure(std::string("Crank-Nicolson step matrix (P - B) is singular: ") +
                        e.what());
  }
}

Vector CrankNicolson::initial_state() const {
  Vector u(grid_.points());
  for (int i = 0; i <= grid_.intervals(); ++i) {
    u[static_cast<std::size_t>(i)] = problem_.initial(grid_.x(i));
  }
  u.front() = problem_.left_boundary(0.0);
  u.back() = problem_.right_boundary(0.0);
  return u;
}

Vector CrankNicolson::step(std::span<const double> current, int m) const {
  const std::size_t n1 = grid_.points();
  if (current.size() != n1) throw UsageError("state has wrong length");
  const double t_next = (m + 1) * tau_;
  const double t_mid = (m + 0.5) * tau_;

  Vector f(n1);
  for (int i = 0; i <= grid_.intervals(); ++i) {
    f[static_cast<std::size_t>(i)] = problem_.source(grid_.x(i), t_mid);
  }
  const Vector pf = p_ * f;
  const Vector ru = right_ * current;

  const double left_next = problem_.left_boundary(t_next);
  const double right_next = problem_.right_boundary(t_next);
  Vector rhs(n1 - 2);
  for (std::size_t i = 1; i + 1 < n1; ++i) {
    // Known boundary columns of (P - B) move to the right-hand side.
    const double l0 = p_(i, 0) - b_(i, 0);
    const double ln = p_(i, n1 - 1) - b_(i, n1 - 1);
    rhs[i - 1] = ru[i] + tau_ * pf[i] - l0 * left_next - ln * right_next;
  }
  left_lu_->solve_in_place(rhs);

  Vector next(n1);
  next.front() = left_next;
  next.back() = right_next;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (!std::isfinite(rhs[i])) {
      throw SolverFailure("non-finite value at Crank-Nicolson step " + std::to_string(m + 1));
    }
    next[i + 1] = rhs[i];
  }
  return next;
}

Vector CrankNicolson::step_interior(std::span<const double> v, std::span<const double> s) const {
  if (v.size() != interior() || s.size() != interior()) {
    throw UsageError("interior state has wrong length");
  }
  Vector rhs = right_hat_ * v;
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += tau_ * s[i];
  left_lu_->solve_in_place(rhs);
  return rhs;
}

Trajectory cn_solve(const DiffusionProblem& problem, const GridSpec& grid, int steps,
                    Scheme scheme) {
  const CrankNicolson cn(problem, grid, steps, scheme);
  Trajectory out;
  out.tau = cn.tau();
  out.rows.reserve(static_cast<std::size_t>(steps) + 1);
  out.rows.push_back(cn.initial_state());
  for (int m = 0; m < steps; ++m) out.rows.push_back(cn.step(out.rows.back(), m));
  return out;
}

Vector cn_final(const DiffusionProblem& problem, const GridSpec& grid, int steps, Scheme scheme) {
  const CrankNicolson cn(problem, grid, steps, scheme);
  Vector u = cn.initial_state();
  for (int m = 0; m < steps; ++m) u = cn.step(u, m);
  return u;
}

double final_max_error(const DiffusionProblem& problem, const GridSpec& grid,
                       std::span<const double> final_state) {
  if (!problem.exact) throw UsageError("problem has no exact solution");
  if (final_state.size() != grid.points()) throw UsageError("state has wrong length");
  double err = 0.0;
  for (int i = 0; i <= grid.intervals(); ++i) {
    const double e = std::fabs(final_state[static_cast<std::size_t>(i)] -
                               problem.exact(grid.x(i), problem.final_time));
    if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
    err = std::max(err, e);
  }
  return err;
}

StabilityEstimateReport stability_estimate_check(const DiffusionProblem& problem,
                                                 const GridSpec& grid, int steps, Scheme scheme,
                                                 const StabilityEstimateOptions& options) {
  const CrankNicolson cn(problem, grid, steps, scheme);
  const std::size_t n = grid.points() - 2;
  const double h = grid.h();
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;

  Vector v(n);
  for (double& x : v) x = options.initial_amplitude * normal(rng);

  const double sqrt5 = std::sqrt(5.0);
  const double v0 = discrete_norm(v, h);
  double source_sum = 0.0;
  StabilityEstimateReport report;
  report.norms.push_back(v0);
  report.bounds.push_back(scheme == Scheme::order3 ? sqrt5 * v0 : v0);

  Vector s(n);
  for (int m = 0; m < steps; ++m) {
    for (double& x : s) x = options.source_amplitude * normal(rng);
    source_sum += discrete_norm(s, h);
    v = cn.step_interior(v, s);
    const double norm = discrete_norm(v, h);
    const double bound = scheme == Scheme::order3
                             ? sqrt5 * (v0 + sqrt5 * cn.tau() * source_sum)
                             : v0 + cn.tau() * source_sum;
    report.norms.push_back(norm);
    report.bounds.push_back(bound);
  }
  for (std::size_t m = 0; m < report.norms.size(); ++m) {
    const double norm = report.norms[m];
    const double bound = report.bounds[m];
    if (bound > 0) report.worst_ratio = std::max(report.worst_ratio, norm / bound);
    if (!(norm <= bound * (1.0 + kStabilityBoundSlack))) {
      report.passed = false;
    }
  }
  return report;
}

}  // namespace fracgen
