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
#ifndef FRACGEN_SERIES_HPP
#define FRACGEN_SERIES_HPP

// Truncated power series in one variable, c_0 + c_1 z + ... + c_L z^L.
//
// All arithmetic is performed modulo z^(L+1); coefficients beyond L are never
// formed. Values are immutable after construction.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracgen/errors.hpp"
#include "fracgen/rational.hpp"

namespace fracgen {

template <Scalar T>
class TruncatedSeries {
 public:
  using value_type = T;

  /// The zero series truncated at order L.
  explicit TruncatedSeries(int truncation_order) {
    if (truncation_order < 0) throw UsageError("truncation order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(truncation_order) + 1, T(0));
  }

  /// Takes c_0..c_L; L is coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw UsageError("a series needs at least one coefficient");
  }

  /// Leading coefficients given, remaining ones zero (or dropped past L).
  TruncatedSeries(std::initializer_list<T> leading, int truncation_order)
      : TruncatedSeries(truncation_order) {
    std::size_t i = 0;
    for (const T& c : leading) {
      if (i >= coeffs_.size()) break;
      coeffs_[i++] = c;
    }
  }

  static TruncatedSeries constant(const T& c, int truncation_order) {
    TruncatedSeries s(truncation_order);
    s.coeffs_[0] = c;
    return s;
  }

  int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int l) const { return coeffs_.at(static_cast<std::size_t>(l)); }
  std::span<const T> coefficients() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    std::vector<T> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    std::vector<T> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs_[i] - b.coeffs_[i];
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    const std::size_t n = a.coeffs_.size();
    std::vector<T> out(n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(out));
  }

  friend TruncatedSeries operator*(const T& c, const TruncatedSeries& a) {
    std::vector<T> out(a.coeffs_);
    for (T& x : out) x *= c;
    return TruncatedSeries(std::move(out));
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
      if (i) os << " + ";
      os << s.coeffs_[i];
      if (i) os << "*z^" << i;
    }
    return os << " + O(z^" << s.coeffs_.size() << ")";
  }

 private:
  static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) {
      throw UsageError("series truncation orders differ: " +
                       std::to_string(a.truncation_order()) + " vs " +
                       std::to_string(b.truncation_order()));
    }
  }

  std::vector<T> coeffs_;
};

template <Scalar T>
TruncatedSeries<T> series_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return a + b;
}

template <Scalar T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return a * b;
}

/// Maclaurin expansion of exp(c z): c^l / l!.
template <Scalar T>
TruncatedSeries<T> series_exp_scaled(const T& c, int truncation_order) {
  if (truncation_order < 0) throw UsageError("truncation order must be >= 0");
  std::vector<T> out(static_cast<std::size_t>(truncation_order) + 1);
  out[0] = T(1);
  for (int l = 1; l <= truncation_order; ++l) out[l] = out[l - 1] * c / T(l);
  return TruncatedSeries<T>(std::move(out));
}

/// a^alpha for a series with positive constant term, via the logarithmic
/// derivative recurrence
///   m a_0 b_m = sum_{k=1..m} (k (alpha + 1) - m) a_k b_{m-k},  b_0 = a_0^alpha.
/// The exact kind throws DomainError when a_0^alpha is irrational.
template <Scalar T>
TruncatedSeries<T> series_pow_real(const TruncatedSeries<T>& a, const T& alpha) {
  if (!(a[0] > 0)) throw DomainError("series power needs a positive constant term");
  const int L = a.truncation_order();
  std::vector<T> b(static_cast<std::size_t>(L) + 1, T(0));
  b[0] = positive_power(a[0], alpha);
  for (int m = 1; m <= L; ++m) {
    T acc(0);
    for (int k = 1; k <= m; ++k) {
      if (a[k] == 0) continue;
      acc += (T(k) * (alpha + T(1)) - T(m)) * a[k] * b[m - k];
    }
    b[m] = acc / (T(m) * a[0]);
  }
  return TruncatedSeries<T>(std::move(b));
}

namespace detail {

// Tolerance used to decide whether a floating sum of beta vanishes.
inline constexpr double kBetaSumTolerance = 1e-12;

template <Scalar T>
void require_consistent(std::span<const T> beta) {
  T sum(0);
  T mass(0);
  for (const T& b : beta) {
    sum += b;
    mass += abs_value(b);
  }
  bool ok;
  if constexpr (is_exact_v<T>) {
    ok = (sum == 0);
  } else {
    ok = std::fabs(sum) <= kBetaSumTolerance * std::max(1.0, mass);
  }
  if (!ok) {
    throw ConsistencyError("generator is inconsistent: sum of beta is " +
                           std::to_string(to_double(sum)) +
                           ", but a consistent generator needs W(1) = 0");
  }
}

}  // namespace detail

/// Expansion of P(e^{-z}) / z where P(z) = sum_k beta_k z^k and sum beta_k = 0.
/// The constant term of P(e^{-z}) cancels symbolically:
///   P(e^{-z}) / z = sum_l z^l sum_k beta_k (-k)^{l+1} / (l+1)!.
template <Scalar T>
TruncatedSeries<T> divided_polynomial_symbol(std::span<const T> beta, int truncation_order) {
  detail::require_consistent(beta);
  std::vector<T> out(static_cast<std::size_t>(truncation_order) + 1, T(0));
  for (std::size_t k = 1; k < beta.size(); ++k) {
    if (beta[k] == 0) continue;
    // term_l = (-k)^{l+1} / (l+1)!
    T term = -T(static_cast<long>(k));
    for (int l = 0; l <= truncation_order; ++l) {
      out[l] += beta[k] * term;
      term = term * -T(static_cast<long>(k)) / T(l + 2);
    }
  }
  return TruncatedSeries<T>(std::move(out));
}

/// G_r(z) = W(e^{-z}) e^{r z} / z^alpha with W(z) = (sum_k beta_k z^k)^alpha,
/// formed as (P(e^{-z})/z)^alpha * e^{r z}. Coefficient l is a_l(r).
template <Scalar T>
TruncatedSeries<T> normalized_symbol(std::span<const T> beta, const T& shift, const T& alpha,
                                     int truncation_order) {
  if (truncation_order < 1) throw UsageError("normalized symbol needs truncation order >= 1");
  auto inner = divided_polynomial_symbol(beta, truncation_order);
  return series_pow_real(inner, alpha) * series_exp_scaled(shift, truncation_order);
}

}  // namespace fracgen

#endif  // FRACGEN_SERIES_HPP
