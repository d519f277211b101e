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
#ifndef FRACGEN_RATIONAL_HPP
#define FRACGEN_RATIONAL_HPP

// Scalar support shared by the series and generator modules. Two scalar
// kinds are supported: double (floating) and Rational (exact). Generic code
// is written once against the helpers below.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "fracgen/errors.hpp"

namespace fracgen {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// The exact binary value of a finite double.
inline Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot represent non-finite value exactly");
  return Rational(x);
}

template <Scalar T>
T scalar_from_double(double x) {
  if constexpr (is_exact_v<T>) {
    return exact_from_double(x);
  } else {
    return x;
  }
}

/// Parses "3", "-2/3", "1.1", "1.5e-1" into an exact rational. Decimal
/// literals are read in base 10, so "1.1" is exactly 11/10.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

/// Floor of the n-th root of a non-negative integer.
BigInt integer_root(const BigInt& x, unsigned n);

/// x^e for integer e (negative allowed when x != 0).
template <Scalar T>
T pow_int(const T& x, long e) {
  if (e < 0) {
    if (x == 0) throw DomainError("zero to a negative power");
    return T(1) / pow_int(x, -e);
  }
  T result(1);
  T base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

/// Exact x^(p/q) when it is rational, std::nullopt otherwise. Requires x > 0.
std::optional<Rational> exact_rational_power(const Rational& x, const Rational& exponent);

/// x^exponent for x > 0. Exact kind throws DomainError when the result is
/// irrational.
template <Scalar T>
T positive_power(const T& x, const T& exponent) {
  if (!(x > 0)) throw DomainError("power base must be positive");
  if constexpr (is_exact_v<T>) {
    auto r = exact_rational_power(x, exponent);
    if (!r) {
      throw DomainError("power " + to_string(x) + "^(" + to_string(exponent) +
                        ") is not rational");
    }
    return *r;
  } else {
    return std::pow(x, exponent);
  }
}

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace fracgen

#endif  // FRACGEN_RATIONAL_HPP
