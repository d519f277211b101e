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
#include "fracgen/rational.hpp"

#include <cctype>
#include <sstream>

namespace fracgen {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw UsageError("malformed number: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("malformed number: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_part(text.substr(e + 1));
    try {
      std::size_t used = 0;
      exponent = std::stol(exp_part, &used);
      if (used != exp_part.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("malformed exponent in '" + std::string(whole) + "'");
    }
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    exponent -= static_cast<long>(text.size() - dot - 1);
    if (digits.empty()) throw UsageError("malformed number: '" + std::string(whole) + "'");
  } else {
    digits = std::string(text);
  }
  Rational value(parse_integer(digits, whole));
  value *= pow_int(Rational(10), exponent);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw UsageError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash), text);
    Rational den = parse_decimal(text.substr(slash + 1), text);
    if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text, text);
}

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

BigInt integer_root(const BigInt& x, unsigned n) {
  if (x < 0) throw DomainError("integer root of a negative number");
  if (n == 0) throw DomainError("zeroth root");
  if (n == 1 || x < 2) return x;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / n + 1);
  // Invariant: lo^n <= x < hi^n.
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (boost::multiprecision::pow(mid, n) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::optional<Rational> exact_rational_power(const Rational& x, const Rational& exponent) {
  if (!(x > 0)) throw DomainError("power base must be positive");
  const BigInt p = boost::multiprecision::numerator(exponent);
  const BigInt q = boost::multiprecision::denominator(exponent);
  if (x == 1) return Rational(1);
  if (q > 64 || abs(p) > 4096) {
    // Reported as irrational rather than forming enormous integers.
    return std::nullopt;
  }
  const unsigned qn = q.convert_to<unsigned>();
  const long pn = p.convert_to<long>();
  Rational base = x;
  if (qn > 1) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    const BigInt rn = integer_root(num, qn);
    const BigInt rd = integer_root(den, qn);
    if (boost::multiprecision::pow(rn, qn) != num || boost::multiprecision::pow(rd, qn) != den) {
      return std::nullopt;
    }
    base = Rational(rn, rd);
  }
  return pow_int(base, pn);
}

}  // namespace fracgen
