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
#include "fracgen/steady.hpp"

#include <atomic>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "fracgen/errors.hpp"

namespace fracgen {

std::string to_string(Scheme s) { return s == Scheme::order2 ? "order2" : "order3"; }

Scheme parse_scheme(const std::string& text) {
  if (text == "order2" || text == "2") return Scheme::order2;
  if (text == "order3" || text == "3") return Scheme::order3;
  throw UsageError("unknown scheme '" + text + "' (expected order2 or order3)");
}

void SteadyProblem::validate() const {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw DomainError("steady problem needs alpha in (1, 2], got " + std::to_string(alpha));
  }
  if (!(b > a)) throw UsageError("steady problem needs a < b");
  if (!source) throw UsageError("steady problem has no source");
}

SteadyProblem power_steady_problem(double alpha, int n) {
  const double c = 10.0 * std::tgamma(n + 1.0) / std::tgamma(n + 1.0 - alpha);
  SteadyProblem p;
  p.a = 0.0;
  p.b = 1.0;
  p.alpha = alpha;
  p.source = [c, n, alpha](double x) { return x <= 0.0 ? 0.0 : c * std::pow(x, n - alpha); };
  p.phi0 = 0.0;
  p.phi1 = 10.0;
  p.exact = [n](double x) { return 10.0 * std::pow(x, n); };
  return p;
}

Vector solve_steady_with_generator(const SteadyProblem& problem, const GridSpec& grid,
                                   const GeneratorSpec& generator, double a2) {
  const int r = integer_shift(generator.shift);
  const auto weights = grunwald_weights(generator, required_weight_index(grid, r));
  const DenseMatrix a = assemble_frac_matrix(weights, grid, Side::left).dense();

  Vector f(grid.points());
  for (int i = 0; i <= grid.intervals(); ++i) f[static_cast<std::size_t>(i)] = problem.source(grid.x(i));
  // The preconditioner acts on the full F so that f_0 and f_N reach the
  // first and last interior rows.
  const Vector rhs = a2 != 0.0 ? Preconditioner(a2, grid.points()).apply(f) : f;

  auto reduced = reduce_system(a, rhs, problem.phi0, problem.phi1);
  const LuFactorization lu(std::move(reduced.matrix));
  lu.solve_in_place(reduced.rhs);

  Vector u(grid.points());
  u.front() = problem.phi0;
  u.back() = problem.phi1;
  std::copy(reduced.rhs.begin(), reduced.rhs.end(), u.begin() + 1);
  return u;
}

Vector solve_steady(const SteadyProblem& problem, const GridSpec& grid, Scheme scheme) {
  problem.validate();
  const auto g = beta_table<double>(2, 1.0, problem.alpha);
  const double a2 = scheme == Scheme::order3 ? a2_coefficient(1.0, problem.alpha) : 0.0;
  return solve_steady_with_generator(problem, grid, g, a2);
}

double max_error(std::span<const double> solution, const GridSpec& grid,
                 const std::function<double(double)>& exact) {
  if (!exact) throw UsageError("problem has no exact solution");
  if (solution.size() != grid.points()) throw UsageError("solution has wrong length");
  double err = 0.0;
  for (int i = 0; i <= grid.intervals(); ++i) {
    const double e = std::fabs(solution[static_cast<std::size_t>(i)] - exact(grid.x(i)));
    if (!std::isfinite(e)) return std::numeric_limits<double>::infinity();
    err = std::max(err, e);
  }
  return err;
}

bool StabilityReport::all_stable() const {
  for (const auto& p : points) {
    if (!p.stable) return false;
  }
  return true;
}

std::optional<double> StabilityReport::stable_from() const {
  std::optional<double> from;
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    if (!it->stable) break;
    from = it->alpha;
  }
  return from;
}

namespace {

double max_rayleigh_quotient(const DenseMatrix& a, int samples, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(a.rows());
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    for (double& x : v) x = normal(rng);
    const double q = quadratic_form(a, v) / dot(v, v);
    if (std::isnan(q)) return std::numeric_limits<double>::infinity();
    best = std::max(best, q);
  }
  return best;
}

StabilityPoint scan_point(int p, int r, double alpha, const GridSpec& grid, std::uint64_t seed) {
  StabilityPoint pt;
  pt.alpha = alpha;
  GeneratorSpec g;
  try {
    g = beta_table<double>(p, static_cast<double>(r), alpha);
    const auto w = grunwald_weights(g, required_weight_index(grid, r));
    const DenseMatrix a = assemble_frac_matrix(w, grid, Side::left).dense();
    std::mt19937_64 rng(seed);
    pt.max_rayleigh = max_rayleigh_quotient(a.principal_block(1, grid.points() - 2),
                                            kStabilityRayleighSamples, rng);
  } catch (const Error& e) {
    pt.max_rayleigh = std::numeric_limits<double>::infinity();
    pt.note = e.what();
    pt.stable = false;
    return pt;
  }
  const bool rayleigh_ok = pt.max_rayleigh <= kStabilityRayleighSlack;

  if (alpha > 1.0 && alpha <= 2.0) {
    pt.solve_checked = true;
    const auto problem = power_steady_problem(alpha);
    try {
      const GridSpec base(problem.a, problem.b, kStabilityBaselineIntervals);
      pt.baseline_error =
          max_error(solve_steady_with_generator(problem, base, g), base, problem.exact);
      const GridSpec fine(problem.a, problem.b, grid.intervals());
      pt.max_error = max_error(solve_steady_with_generator(problem, fine, g), fine, problem.exact);
      pt.solve_ok = std::isfinite(pt.max_error) &&
                    pt.max_error <= kStabilityErrorBlowup * pt.baseline_error;
      if (!pt.solve_ok) pt.note = "error blow-up";
    } catch (const Error& e) {
      pt.solve_ok = false;
      pt.note = e.what();
    }
  } else {
    pt.note = "solve check not applicable (alpha outside (1, 2])";
  }
  pt.stable = rayleigh_ok && (!pt.solve_checked || pt.solve_ok);
  if (!rayleigh_ok && pt.note.empty()) pt.note = "positive Rayleigh quotient";
  return pt;
}

}  // namespace

StabilityReport stability_scan(int p, int r, std::span<const double> alpha_grid,
                               const GridSpec& grid, std::uint64_t seed) {
  if (p < kMinGeneratorOrder || p > kMaxGeneratorOrder) {
    throw UnsupportedOrder("stability scan order must be in 1..6");
  }
  if (r < 0) throw UsageError("stability scan needs a non-negative shift");
  StabilityReport report{p, r, grid.intervals(), std::vector<StabilityPoint>(alpha_grid.size())};

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < alpha_grid.size(); i = next++) {
      report.points[i] = scan_point(p, r, alpha_grid[i], grid, seed + i);
    }
  };
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(alpha_grid.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return report;
}

}  // namespace fracgen
