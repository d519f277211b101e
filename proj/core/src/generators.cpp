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
#include "fracgen/generators.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "fracgen/errors.hpp"
#include "fracgen/series.hpp"

namespace fracgen {

namespace {

struct Fraction {
  long num;
  long den;
};

template <Scalar T>
T make(const Fraction& f) {
  return T(f.num) / T(f.den);
}

// Table of beta_k(q), q = r / alpha, as coefficients of q^0, q^1, ...
using Row = std::vector<Fraction>;
using OrderTable = std::vector<Row>;

const std::array<OrderTable, kMaxGeneratorOrder>& shifted_beta_table() {
  static const std::array<OrderTable, kMaxGeneratorOrder> table = {{
      // p = 1
      {{{1, 1}}, {{-1, 1}}},
      // p = 2
      {{{3, 2}, {-1, 1}},
       {{-2, 1}, {2, 1}},
       {{1, 2}, {-1, 1}}},
      // p = 3
      {{{11, 6}, {-2, 1}, {1, 2}},
       {{-3, 1}, {5, 1}, {-3, 2}},
       {{3, 2}, {-4, 1}, {3, 2}},
       {{-1, 3}, {1, 1}, {-1, 2}}},
      // p = 4
      {{{25, 12}, {-35, 12}, {5, 4}, {-1, 6}},
       {{-4, 1}, {26, 3}, {-9, 2}, {2, 3}},
       {{3, 1}, {-19, 2}, {6, 1}, {-1, 1}},
       {{-4, 3}, {14, 3}, {-7, 2}, {2, 3}},
       {{1, 4}, {-11, 12}, {3, 4}, {-1, 6}}},
      // p = 5
      {{{137, 60}, {-15, 4}, {17, 8}, {-1, 2}, {1, 24}},
       {{-5, 1}, {77, 6}, {-71, 8}, {7, 3}, {-5, 24}},
       {{5, 1}, {-107, 6}, {59, 4}, {-13, 3}, {5, 12}},
       {{-10, 3}, {13, 1}, {-49, 4}, {4, 1}, {-5, 12}},
       {{5, 4}, {-61, 12}, {41, 8}, {-11, 6}, {5, 24}},
       {{-1, 5}, {5, 6}, {-7, 8}, {1, 3}, {-1, 24}}},
      // p = 6
      {{{49, 20}, {-203, 45}, {49, 16}, {-35, 36}, {7, 48}, {-1, 120}},
       {{-6, 1}, {87, 5}, {-29, 2}, {31, 6}, {-5, 6}, {1, 20}},
       {{15, 2}, {-117, 4}, {461, 16}, {-137, 12}, {95, 48}, {-1, 8}},
       {{-20, 3}, {254, 9}, {-31, 1}, {121, 9}, {-5, 2}, {1, 6}},
       {{15, 4}, {-33, 2}, {307, 16}, {-107, 12}, {85, 48}, {-1, 8}},
       {{-6, 5}, {27, 5}, {-13, 2}, {19, 6}, {-2, 3}, {1, 20}},
       {{1, 6}, {-137, 180}, {15, 16}, {-17, 36}, {5, 48}, {-1, 120}}},
  }};
  return table;
}

void require_supported_order(int p) {
  if (p < kMinGeneratorOrder || p > kMaxGeneratorOrder) {
    throw UnsupportedOrder("generator order " + std::to_string(p) + " is outside " +
                           std::to_string(kMinGeneratorOrder) + ".." +
                           std::to_string(kMaxGeneratorOrder));
  }
}

template <Scalar T>
bool is_zero(const T& x, const T& scale) {
  if constexpr (is_exact_v<T>) {
    (void)scale;
    return x == 0;
  } else {
    return std::fabs(x) < kFloatingZeroThreshold * std::max(1.0, std::fabs(scale));
  }
}

// Gaussian elimination with partial pivoting (largest magnitude pivot; any
// nonzero pivot is exact for rationals). Returns false when singular.
template <Scalar T>
bool solve_in_place(std::vector<std::vector<T>>& a, std::vector<T>& b) {
  const std::size_t n = b.size();
  T scale(0);
  for (const auto& row : a) {
    for (const T& x : row) scale = std::max(scale, abs_value(x));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (abs_value(a[row][col]) > abs_value(a[pivot][col])) pivot = row;
    }
    if constexpr (is_exact_v<T>) {
      if (a[pivot][col] == 0) return false;
    } else {
      if (abs_value(a[pivot][col]) <= 1e-14 * scale) return false;
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const T factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * b[k];
    b[i] = acc / a[i][i];
  }
  return true;
}

template <Scalar T>
OrderReport read_order(const TruncatedSeries<T>& g, int expected_p) {
  OrderReport report;
  report.expected_order = expected_p;
  report.exact = is_exact_v<T>;
  const int L = g.truncation_order();
  for (int l = 0; l <= L; ++l) report.coefficients.push_back(to_double(g[l]));
  report.observed_order = L + 1;
  report.leading_coeff = 0;
  for (int l = 1; l <= L; ++l) {
    if (!is_zero(g[l], g[0])) {
      report.observed_order = l;
      report.leading_coeff = to_double(g[l]);
      break;
    }
  }
  return report;
}

template <Scalar T>
std::string scalar_text(const T& x) {
  std::ostringstream os;
  os << to_double(x);
  return os.str();
}

}  // namespace

template <Scalar T>
void BasicGenerator<T>::validate() const {
  if (beta.size() < 2) throw UsageError("generator needs at least two beta coefficients");
  std::vector<T> copy(beta);
  detail::require_consistent<T>(copy);
  if (!(beta[0] > 0)) {
    throw DomainError("generator needs beta_0 > 0, got " + scalar_text(beta[0]));
  }
}

GeneratorSpec to_floating(const ExactGenerator& g) {
  GeneratorSpec out;
  out.alpha = to_double(g.alpha);
  out.order = g.order;
  out.shift = to_double(g.shift);
  for (const auto& b : g.beta) out.beta.push_back(to_double(b));
  return out;
}

template <Scalar T>
BasicGenerator<T> beta_table(int p, const T& shift, const T& alpha) {
  require_supported_order(p);
  if (alpha == 0) throw DomainError("alpha must be nonzero");
  const T q = shift / alpha;
  BasicGenerator<T> g{alpha, p, shift, {}};
  for (const Row& row : shifted_beta_table()[static_cast<std::size_t>(p - 1)]) {
    // Horner in q.
    T value(0);
    for (auto it = row.rbegin(); it != row.rend(); ++it) value = value * q + make<T>(*it);
    g.beta.push_back(value);
  }
  return g;
}

template <Scalar T>
BasicGenerator<T> construct_beta(int p, const T& shift, const T& alpha) {
  require_supported_order(p);
  if (alpha == 0) throw DomainError("alpha must be nonzero");
  const T s = shift / alpha;
  const std::size_t n = static_cast<std::size_t>(p) + 1;

  // exp(s z) coefficients s^i / i!, i < p.
  std::vector<T> exp_coeffs(n, T(1));
  for (std::size_t i = 1; i < n; ++i) exp_coeffs[i] = exp_coeffs[i - 1] * s / T(static_cast<long>(i));

  std::vector<std::vector<T>> a(n, std::vector<T>(n, T(0)));
  std::vector<T> rhs(n, T(0));
  for (std::size_t k = 1; k < n; ++k) {
    // d_l = (-k)^{l+1} / (l+1)!, coefficient of z^l in (e^{-k z} - 1) / z.
    std::vector<T> d(n);
    T term = -T(static_cast<long>(k));
    for (std::size_t l = 0; l < n; ++l) {
      d[l] = term;
      term = term * -T(static_cast<long>(k)) / T(static_cast<long>(l) + 2);
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
      T c(0);
      for (std::size_t l = 0; l <= j; ++l) c += d[l] * exp_coeffs[j - l];
      a[j][k] = c;
    }
  }
  rhs[0] = T(1);
  for (std::size_t k = 0; k < n; ++k) a[n - 1][k] = T(1);

  if (!solve_in_place(a, rhs)) {
    throw ConstructionFailure("singular order-condition system for p=" + std::to_string(p) +
                              ", r=" + scalar_text(shift) + ", alpha=" + scalar_text(alpha));
  }
  return BasicGenerator<T>{alpha, p, shift, std::move(rhs)};
}

template <Scalar T>
BasicGenerator<T> lubich_generator(int p, const T& alpha) {
  require_supported_order(p);
  std::vector<T> beta(static_cast<std::size_t>(p) + 1, T(0));
  for (int j = 1; j <= p; ++j) {
    // (1 - z)^j / j
    T binom(1);
    for (int k = 0; k <= j; ++k) {
      const T sign = (k % 2 == 0) ? T(1) : T(-1);
      beta[static_cast<std::size_t>(k)] += sign * binom / T(j);
      binom = binom * T(j - k) / T(k + 1);
    }
  }
  return BasicGenerator<T>{alpha, p, T(0), std::move(beta)};
}

WeightSequence grunwald_weights(const GeneratorSpec& g, int max_index) {
  if (max_index < 0) throw UsageError("weight count must be non-negative");
  if (g.beta.empty() || !(g.beta[0] > 0)) {
    throw DomainError("weights need beta_0 > 0");
  }
  const auto& beta = g.beta;
  const int p = static_cast<int>(beta.size()) - 1;
  const double alpha = g.alpha;
  std::vector<double> w(static_cast<std::size_t>(max_index) + 1);
  w[0] = std::pow(beta[0], alpha);
  for (int m = 1; m <= max_index; ++m) {
    double acc = 0;
    const int top = std::min(m, p);
    for (int k = 1; k <= top; ++k) {
      acc += (k * (alpha + 1) - m) * beta[static_cast<std::size_t>(k)] * w[m - k];
    }
    w[m] = acc / (m * beta[0]);
  }
  return WeightSequence{std::move(w), g.alpha, g.shift, g};
}

template <Scalar T>
OrderReport verify_order(const BasicGenerator<T>& g, int expected_p) {
  if (expected_p < 1) throw UsageError("expected order must be >= 1");
  g.validate();
  const int L = expected_p + 3;
  const auto inner = divided_polynomial_symbol<T>(g.beta, L);
  bool leading_is_one;
  if constexpr (is_exact_v<T>) {
    leading_is_one = inner[0] == 1;
  } else {
    leading_is_one = std::fabs(std::pow(inner[0], g.alpha) - 1.0) <= kFloatingZeroThreshold;
  }
  if (!leading_is_one) {
    throw ConsistencyError("normalized symbol does not start with 1 (a_0 = " +
                           scalar_text(inner[0]) + "^alpha)");
  }
  const auto symbol = series_pow_real(inner, g.alpha) * series_exp_scaled(g.shift, L);
  return read_order(symbol, expected_p);
}

template <Scalar T>
OrderReport convex_combination_check(int p_shift, int q_shift, const T& alpha) {
  if (p_shift == q_shift) {
    throw UsageError("convex combination needs two distinct shifts");
  }
  constexpr int kExpected = 2;
  const int L = kExpected + 3;
  const std::vector<T> grunwald{T(1), T(-1)};
  const auto base = normalized_symbol<T>(grunwald, T(0), alpha, L);
  const T denom = T(2) * T(p_shift - q_shift);
  const T lambda1 = (alpha - T(2) * T(q_shift)) / denom;
  const T lambda2 = (T(2) * T(p_shift) - alpha) / denom;
  const auto combined = lambda1 * (series_exp_scaled(T(p_shift), L) * base) +
                        lambda2 * (series_exp_scaled(T(q_shift), L) * base);
  return read_order(combined, kExpected);
}

std::string describe(const GeneratorSpec& g) {
  std::ostringstream os;
  os << "W(p=" << g.order << ", r=" << g.shift << ", alpha=" << g.alpha << ") beta=(";
  for (std::size_t i = 0; i < g.beta.size(); ++i) os << (i ? ", " : "") << g.beta[i];
  os << ")";
  return os.str();
}

#define FRACGEN_INSTANTIATE(T)                                                         \
  template struct BasicGenerator<T>;                                                   \
  template BasicGenerator<T> beta_table<T>(int, const T&, const T&);                   \
  template BasicGenerator<T> construct_beta<T>(int, const T&, const T&);               \
  template BasicGenerator<T> lubich_generator<T>(int, const T&);                       \
  template OrderReport verify_order<T>(const BasicGenerator<T>&, int);                 \
  template OrderReport convex_combination_check<T>(int, int, const T&);

FRACGEN_INSTANTIATE(double)
FRACGEN_INSTANTIATE(Rational)

#undef FRACGEN_INSTANTIATE

}  // namespace fracgen
