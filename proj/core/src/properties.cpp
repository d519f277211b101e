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
#include "fracgen/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "fracgen/diffusion.hpp"
#include "fracgen/errors.hpp"
#include "fracgen/generators.hpp"
#include "fracgen/operators.hpp"
#include "fracgen/steady.hpp"

namespace fracgen {

int SuiteReport::passed_count() const {
  return static_cast<int>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
}

int SuiteReport::failed_count() const {
  return static_cast<int>(results.size()) - passed_count();
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

constexpr int kWeightCount = 2000;
constexpr double kSignSlack = 1e-14;
constexpr int kRandomVectors = 200;

// Collects the first few violations of a property.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void fail(const std::string& what) {
    if (failures_++ < 3) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what;
    }
  }
  void note(const std::string& what) { summary_ = what; }

  PropertyResult result() const {
    PropertyResult r{name_, failures_ == 0, {}};
    if (failures_ == 0) {
      r.detail = summary_;
    } else {
      r.detail = std::to_string(failures_) + " violation(s): " + detail_;
    }
    return r;
  }

 private:
  std::string name_;
  int failures_ = 0;
  std::string detail_;
  std::string summary_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::vector<double> alpha_grid(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * i / (count - 1));
  return out;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> dist;
  Vector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

class Suite {
 public:
  Suite(std::uint64_t seed, const PropertyOptions& options) : seed_(seed), options_(options) {}

  std::mt19937_64 rng(int salt) const { return std::mt19937_64(seed_ * 1000003u + salt); }

  // Weights of the (p=2, r=1) generator as seen by the weight-data checks.
  WeightSequence shifted_weights(double alpha, int count) const {
    auto w = grunwald_weights(beta_table<double>(2, 1.0, alpha), count);
    if (options_.negate_first_weight && w.size() > 1) w.weights[1] = -w.weights[1];
    return w;
  }

  PropertyResult generator_tables() const {
    Check c("generator_construction_matches_table");
    int cases = 0;
    for (int p = kMinGeneratorOrder; p <= kMaxGeneratorOrder; ++p) {
      for (double r : {0.0, 1.0}) {
        for (double alpha : {1.1, 1.5, 1.9, 2.0}) {
          ++cases;
          const auto table = beta_table<double>(p, r, alpha);
          const auto built = construct_beta<double>(p, r, alpha);
          for (int k = 0; k <= p; ++k) {
            const double y = table.beta[k];
            if (std::abs(built.beta[k] - y) > 1e-10 * std::max(1.0, std::abs(y))) {
              c.fail("p=" + std::to_string(p) + " r=" + fmt(r) + " alpha=" + fmt(alpha) +
                     " beta_" + std::to_string(k));
            }
          }
        }
      }
    }
    c.note(std::to_string(cases) + " generators");
    return c.result();
  }

  PropertyResult generator_orders() const {
    Check c("generator_order_at_least_design");
    for (int p = kMinGeneratorOrder; p <= kMaxGeneratorOrder; ++p) {
      for (int r : {0, 1}) {
        for (const char* alpha : {"11/10", "3/2", "19/10", "2"}) {
          const auto g = beta_table<Rational>(p, Rational(r), parse_rational(alpha));
          const auto report = verify_order(g, p);
          if (!report.passed()) {
            c.fail("p=" + std::to_string(p) + " r=" + std::to_string(r) + " alpha=" + alpha +
                   " observed " + std::to_string(report.observed_order));
          }
        }
      }
    }
    c.note("exact expansion, 48 generators");
    return c.result();
  }

  PropertyResult binomial_match() const {
    Check c("first_order_weights_match_binomial");
    for (double alpha : {1.1, 1.5, 1.9, 2.0}) {
      GeneratorSpec g{alpha, 1, 0.0, {1.0, -1.0}};
      const auto w = grunwald_weights(g, 1000);
      double ref = 1.0;
      for (int k = 0; k <= 1000; ++k) {
        if (k > 0) ref *= 1.0 - (alpha + 1.0) / k;
        if (std::abs(w[k] - ref) > 1e-12 * std::abs(ref) + 1e-300) {
          c.fail("alpha=" + fmt(alpha) + " k=" + std::to_string(k));
          break;
        }
      }
    }
    return c.result();
  }

  PropertyResult sign_pattern() const {
    Check c("shifted_weight_sign_pattern");
    for (double alpha : alpha_grid(1.0, 2.0, 50)) {
      const auto w = shifted_weights(alpha, kWeightCount);
      const std::string at = "alpha=" + fmt(alpha);
      if (w[0] < -kSignSlack) c.fail(at + " w_0 < 0");
      if (w[1] > kSignSlack) c.fail(at + " w_1 > 0");
      if (w[0] + w[2] < -kSignSlack) c.fail(at + " w_0 + w_2 < 0");
      for (int m = 3; m <= kWeightCount; ++m) {
        if (w[m] < -kSignSlack) {
          c.fail(at + " w_" + std::to_string(m) + " < 0");
          break;
        }
      }
      double partial = w[0] + w[1];
      for (int m = 2; m <= kWeightCount; ++m) {
        partial += w[m];
        if (partial > kSignSlack) {
          c.fail(at + " partial sum to " + std::to_string(m) + " > 0");
          break;
        }
      }
    }
    c.note("50 alphas in [1, 2], K = 2000");
    return c.result();
  }

  PropertyResult weight_sum_small() const {
    Check c("shifted_weight_sum_vanishes");
    double worst = 0;
    for (double alpha : alpha_grid(1.1, 1.9, 17)) {
      const auto w = shifted_weights(alpha, kWeightCount);
      double s = 0;
      for (double x : w.weights) s += x;
      worst = std::max(worst, std::abs(s));
      if (!(std::abs(s) < 1e-3)) c.fail("alpha=" + fmt(alpha) + " sum=" + fmt(s));
    }
    c.note("max |sum| = " + fmt(worst));
    return c.result();
  }

  PropertyResult toeplitz_conditions() const {
    // t_k = w_{k+1}: t_{-1} = w_0, t_k = 0 for k < -1.
    Check c("toeplitz_symbol_conditions");
    for (double alpha : alpha_grid(1.0, 2.0, 11)) {
      const auto w = shifted_weights(alpha, kWeightCount + 1);
      const std::string at = "alpha=" + fmt(alpha);
      if (w[2] + w[0] < -kSignSlack) c.fail(at + " t_1 + t_-1 < 0");
      for (int k = 2; k < kWeightCount; ++k) {
        if (w[k + 1] < -kSignSlack) {
          c.fail(at + " t_" + std::to_string(k) + " + t_-" + std::to_string(k) + " < 0");
          break;
        }
      }
      // sum_{j=-N}^{N} t_j = w_0 + ... + w_{N+1}
      double sum = w[0] + w[1];
      for (int n = 1; n <= kWeightCount; ++n) {
        sum += w[n + 1];
        if (sum > kSignSlack) {
          c.fail(at + " row sum positive at N=" + std::to_string(n));
          break;
        }
      }
    }
    return c.result();
  }

  PropertyResult matrix_operator_agreement() const {
    Check c("matrix_matches_operator");
    auto gen = rng(1);
    for (int n : {16, 37, 128}) {
      for (double alpha : {1.1, 1.5, 1.9}) {
        for (int r : {0, 1}) {
          for (Side side : {Side::left, Side::right}) {
            const GridSpec grid(0.0, 1.0, n);
            const auto w = grunwald_weights(beta_table<double>(2, double(r), alpha),
                                            required_weight_index(grid, r));
            const auto u = random_vector(gen, grid.points());
            const auto m = assemble_frac_matrix(w, grid, side).dense() * u;
            const auto v = apply_grunwald(u, w, grid, side);
            const double scale = std::max(1.0, max_abs(v));
            for (std::size_t i = 0; i < v.size(); ++i) {
              if (std::abs(m[i] - v[i]) > 1e-13 * scale) {
                c.fail("N=" + std::to_string(n) + " alpha=" + fmt(alpha) + " row " +
                       std::to_string(i));
                break;
              }
            }
          }
        }
      }
    }
    return c.result();
  }

  PropertyResult negative_definite() const {
    Check c("shifted_operator_negative_definite");
    auto gen = rng(2);
    std::uniform_real_distribution<double> coef(0.0, 2.0);
    double worst = -1e300;
    for (double alpha : {1.1, 1.5, 1.9}) {
      for (int n : {16, 64}) {
        const GridSpec grid(0.0, 1.0, n);
        const auto w = shifted_weights(alpha, required_weight_index(grid, 1));
        const std::size_t size = grid.points() - 2;
        const double scale = std::pow(grid.h(), -alpha);
        const DenseMatrix a = FracOperatorMatrix(w.weights, 1, Side::left, scale, size).dense();
        const DenseMatrix at = a.transposed();
        const double k1 = coef(gen);
        const double k2 = coef(gen);
        const DenseMatrix mix = k1 * a + k2 * at;
        for (int s = 0; s < kRandomVectors; ++s) {
          const auto v = random_vector(gen, size);
          const double vv = dot(v, v);
          for (const DenseMatrix* m : {&a, &mix}) {
            const double q = quadratic_form(*m, v);
            worst = std::max(worst, q / vv);
            if (q > 1e-12 * vv) {
              c.fail("alpha=" + fmt(alpha) + " N=" + std::to_string(n) + " v^T A v / |v|^2 = " +
                     fmt(q / vv));
            }
          }
        }
      }
    }
    c.note("max Rayleigh quotient " + fmt(worst));
    return c.result();
  }

  PropertyResult preconditioner_equivalence() const {
    Check c("preconditioner_norm_equivalence");
    auto gen = rng(3);
    double lo = 1e300, hi = -1e300;
    for (double alpha : {1.0, 1.5, 2.0}) {
      const GridSpec grid(0.0, 1.0, 64);
      const Preconditioner p = assemble_preconditioner(a2_coefficient(1.0, alpha), grid);
      const DenseMatrix dense = p.dense();
      if (!dense.is_symmetric(0.0)) c.fail("alpha=" + fmt(alpha) + " not symmetric");
      for (int s = 0; s < kRandomVectors; ++s) {
        auto u = random_vector(gen, grid.points());
        u.front() = 0;
        u.back() = 0;
        const auto pu = p.apply(u);
        const double ratio = discrete_inner(pu, u, grid.h()) / discrete_inner(u, u, grid.h());
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        if (!(ratio > 0.2 && ratio <= 1.0 + 1e-12)) {
          c.fail("alpha=" + fmt(alpha) + " ratio " + fmt(ratio));
        }
      }
    }
    c.note("ratio range [" + fmt(lo) + ", " + fmt(hi) + "]");
    return c.result();
  }

  PropertyResult cn_left_coercive() const {
    Check c("cn_left_matrix_coercive");
    auto gen = rng(4);
    for (Scheme scheme : {Scheme::order2, Scheme::order3}) {
      const double floor = scheme == Scheme::order3 ? 0.2 : 1.0;
      for (double alpha : {1.1, 1.5, 1.9}) {
        const auto problem = polynomial_diffusion_problem(alpha, 1.0, 0.5);
        const GridSpec grid(0.0, 1.0, 32);
        const CrankNicolson cn(problem, grid, 32, scheme);
        const DenseMatrix left = cn.reduced_left();
        for (int s = 0; s < kRandomVectors; ++s) {
          const auto v = random_vector(gen, left.rows());
          const double vv = dot(v, v);
          if (quadratic_form(left, v) < (floor - 1e-12) * vv) {
            c.fail(to_string(scheme) + " alpha=" + fmt(alpha));
            break;
          }
        }
      }
    }
    return c.result();
  }

  PropertyResult cn_energy_step() const {
    Check c("cn_step_contracts_energy");
    auto gen = rng(5);
    for (Scheme scheme : {Scheme::order2, Scheme::order3}) {
      for (double alpha : {1.1, 1.5, 1.9}) {
        const auto problem = polynomial_diffusion_problem(alpha, 0.7, 1.3);
        const GridSpec grid(0.0, 1.0, 32);
        const CrankNicolson cn(problem, grid, 16, scheme);
        const DenseMatrix p = cn.preconditioner().principal_block(1, grid.points() - 2);
        const Vector zero(p.rows(), 0.0);
        for (int s = 0; s < 20; ++s) {
          const auto v0 = random_vector(gen, p.rows());
          const auto v1 = cn.step_interior(v0, zero);
          const double e0 = quadratic_form(p, v0);
          const double e1 = quadratic_form(p, v1);
          if (e1 > e0 * (1.0 + 1e-12)) {
            c.fail(to_string(scheme) + " alpha=" + fmt(alpha) + " energy " + fmt(e0) + " -> " +
                   fmt(e1));
            break;
          }
        }
      }
    }
    return c.result();
  }

  PropertyResult stability_bound() const {
    Check c("cn_stability_estimate");
    auto gen = rng(6);
    std::uniform_real_distribution<double> alpha_dist(1.05, 2.0);
    std::uniform_real_distribution<double> k_dist(0.0, 2.0);
    double worst = 0;
    for (int run = 0; run < 10; ++run) {
      const Scheme scheme = run % 2 == 0 ? Scheme::order2 : Scheme::order3;
      const double alpha = alpha_dist(gen);
      const double k1 = k_dist(gen);
      const double k2 = run == 3 ? 0.0 : k_dist(gen);
      const auto problem = polynomial_diffusion_problem(alpha, k1, k2);
      const GridSpec grid(0.0, 1.0, 24 + 8 * (run % 3));
      StabilityEstimateOptions opts;
      opts.seed = gen();
      const auto report = stability_estimate_check(problem, grid, 40, scheme, opts);
      worst = std::max(worst, report.worst_ratio);
      if (!report.passed) {
        c.fail("run " + std::to_string(run) + " " + to_string(scheme) + " alpha=" + fmt(alpha) +
               " ratio " + fmt(report.worst_ratio));
      }
    }
    c.note("10 runs, worst norm/bound " + fmt(worst));
    return c.result();
  }

 private:
  std::uint64_t seed_;
  PropertyOptions options_;
};

}  // namespace

SuiteReport run_property_suite(std::uint64_t seed, const PropertyOptions& options) {
  const Suite suite(seed, options);
  const std::vector<std::function<PropertyResult()>> checks = {
      [&] { return suite.generator_tables(); },
      [&] { return suite.generator_orders(); },
      [&] { return suite.binomial_match(); },
      [&] { return suite.sign_pattern(); },
      [&] { return suite.weight_sum_small(); },
      [&] { return suite.toeplitz_conditions(); },
      [&] { return suite.matrix_operator_agreement(); },
      [&] { return suite.negative_definite(); },
      [&] { return suite.preconditioner_equivalence(); },
      [&] { return suite.cn_left_coercive(); },
      [&] { return suite.cn_energy_step(); },
      [&] { return suite.stability_bound(); },
  };
  SuiteReport report;
  report.seed = seed;
  for (const auto& check : checks) {
    try {
      report.results.push_back(check());
    } catch (const std::exception& e) {
      report.results.push_back({"(exception)", false, e.what()});
    }
  }
  return report;
}

void print_suite(std::ostream& os, const SuiteReport& report) {
  for (const auto& r : report.results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  os << report.passed_count() << " passed, " << report.failed_count() << " failed (seed "
     << report.seed << ")\n";
}

}  // namespace fracgen
