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
#include "fracgen/series.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fracgen/errors.hpp"
#include "fracgen/generators.hpp"

namespace fracgen {
namespace {

using DS = TruncatedSeries<double>;
using QS = TruncatedSeries<Rational>;

Rational q(const char* text) { return parse_rational(text); }

TEST(SeriesTest, AddCancels) {
  const DS a({1.0, 1.0}, 3);
  const DS b({1.0, -1.0}, 3);
  EXPECT_EQ(series_add(a, b), DS({2.0}, 3));
}

TEST(SeriesTest, AddZeroIsIdentity) {
  const QS a({q("1/3"), q("-2"), q("5/7")}, 2);
  EXPECT_EQ(a + QS(2), a);
}

TEST(SeriesTest, AddHandSum) {
  const QS a({1, 1, 1}, 2);
  const QS b({0, 0, 1}, 2);
  EXPECT_EQ(a + b, QS({1, 1, 2}, 2));
}

TEST(SeriesTest, MismatchedTruncationIsUsageError) {
  EXPECT_THROW(DS(2) + DS(3), UsageError);
  EXPECT_THROW(DS(2) * DS(3), UsageError);
}

TEST(SeriesTest, DifferenceOfSquares) {
  const QS a({1, -1}, 4);
  const QS b({1, 1}, 4);
  EXPECT_EQ(series_mul(a, b), QS({1, 0, -1}, 4));
}

TEST(SeriesTest, MultiplyByOne) {
  const QS a({q("2/3"), q("-1/5"), q("7")}, 2);
  EXPECT_EQ(a * QS::constant(1, 2), a);
}

TEST(SeriesTest, TruncationDropsHighTerms) {
  const DS a({1.0, 1.0}, 1);
  EXPECT_EQ(a * a, DS({1.0, 2.0}, 1));
}

TEST(SeriesTest, ExpScaled) {
  EXPECT_EQ(series_exp_scaled(Rational(0), 4), QS({1}, 4));
  EXPECT_EQ(series_exp_scaled(Rational(1), 3), QS({1, 1, q("1/2"), q("1/6")}, 3));
  EXPECT_EQ(series_exp_scaled(Rational(-1), 2), QS({1, -1, q("1/2")}, 2));
}

TEST(SeriesTest, IntegerPowers) {
  const QS a({1, -1}, 3);
  EXPECT_EQ(series_pow_real(a, Rational(1)), a);
  EXPECT_EQ(series_pow_real(a, Rational(2)), QS({1, -2, 1}, 3));
}

TEST(SeriesTest, SquareRootMatchesGeneralizedBinomial) {
  // (1 - z)^{1/2}: coefficient k is (-1)^k * C(1/2, k), C via factorials of
  // the falling product 1/2 (1/2 - 1) ... (1/2 - k + 1) / k!.
  const int L = 6;
  const auto got = series_pow_real(DS({1.0, -1.0}, L), 0.5);
  for (int k = 0; k <= L; ++k) {
    double falling = 1.0;
    for (int j = 0; j < k; ++j) falling *= 0.5 - j;
    const double binom = falling / std::tgamma(k + 1.0);
    EXPECT_NEAR(got[k], (k % 2 ? -1.0 : 1.0) * binom, 1e-15) << "k=" << k;
  }
  EXPECT_DOUBLE_EQ(got[1], -0.5);
  EXPECT_DOUBLE_EQ(got[2], -0.125);
}

TEST(SeriesTest, PowerNeedsPositiveConstant) {
  EXPECT_THROW(series_pow_real(DS({0.0, 1.0}, 2), 1.5), DomainError);
  EXPECT_THROW(series_pow_real(DS({-1.0, 1.0}, 2), 1.5), DomainError);
}

// (1 - e^{-z}) / z = e^{-z/2} sinh(z/2) / (z/2), so with shift alpha/2 the
// symbol is (sinh(z/2) / (z/2))^alpha = 1 + alpha z^2 / 24 + O(z^4).
TEST(SeriesTest, SymbolOfShiftedFirstOrderAtHalfAlpha) {
  const std::vector<double> beta = {1.0, -1.0};
  const auto g = normalized_symbol<double>(beta, 0.75, 1.5, 3);
  EXPECT_NEAR(g[0], 1.0, 1e-15);
  EXPECT_NEAR(g[1], 0.0, 1e-15);
  EXPECT_NEAR(g[2], 1.5 / 24.0, 1e-15);
  EXPECT_NEAR(g[3], 0.0, 1e-15);
  // Same value from the two-shift leading coefficient with both shifts at alpha/2:
  // -a^2/8 + a s/2 + a/24 - s^2/2.
  const double a = 1.5, s2 = 0.75;
  EXPECT_NEAR(g[2], -a * a / 8 + a * s2 / 2 + a / 24 - s2 * s2 / 2, 1e-15);
}

TEST(SeriesTest, UnshiftedFirstOrderLeadingTerm) {
  const std::vector<Rational> beta = {1, -1};
  for (const char* a : {"11/10", "3/2", "19/10"}) {
    const auto g = normalized_symbol<Rational>(beta, Rational(0), q(a), 3);
    EXPECT_EQ(g[0], 1);
    EXPECT_EQ(g[1], -q(a) / 2) << a;
  }
}

TEST(SeriesTest, ShiftedSecondOrderSymbol) {
  const std::vector<Rational> beta = {q("5/6"), q("-2/3"), q("-1/6")};
  const auto g = normalized_symbol<Rational>(beta, Rational(1), q("3/2"), 4);
  EXPECT_EQ(g[0], 1);
  EXPECT_EQ(g[1], 0);
  EXPECT_EQ(g[2], q("1/6"));
}

TEST(SeriesTest, SymbolRejectsInconsistentBeta) {
  const std::vector<double> beta = {1.0, -0.9};
  EXPECT_THROW(normalized_symbol<double>(beta, 0.0, 1.5, 3), ConsistencyError);
  const std::vector<Rational> exact = {1, q("-999999/1000000")};
  EXPECT_THROW(normalized_symbol<Rational>(exact, Rational(0), Rational(2), 3), ConsistencyError);
}

TEST(SeriesTest, SymbolNeedsPositiveTruncation) {
  const std::vector<double> beta = {1.0, -1.0};
  EXPECT_THROW(normalized_symbol<double>(beta, 0.0, 1.5, 0), UsageError);
}

// Tabulated generators all give a_0 = 1.
TEST(SeriesProperty, LeadingSymbolCoefficientIsOne) {
  for (int p = 1; p <= 6; ++p) {
    for (int r : {0, 1, 2}) {
      const auto g = beta_table<Rational>(p, Rational(r), q("3/2"));
      const auto s = normalized_symbol<Rational>(g.beta, g.shift, g.alpha, 2);
      EXPECT_EQ(s[0], 1) << "p=" << p << " r=" << r;
    }
  }
}

TEST(SeriesProperty, PowerRoundTripFloating) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-0.5, 0.5);
  std::uniform_real_distribution<double> expo(0.3, 2.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(8);
    c[0] = 1.0 + std::abs(coef(rng));
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = coef(rng);
    const DS a(c);
    const double alpha = expo(rng);
    const auto back = series_pow_real(series_pow_real(a, alpha), 1.0 / alpha);
    for (int l = 0; l <= a.truncation_order(); ++l) {
      EXPECT_NEAR(back[l], a[l], 1e-12 * std::max(1.0, std::abs(a[l])));
    }
  }
}

TEST(SeriesProperty, PowerRoundTripExactIntegerExponent) {
  const QS a({4, q("-3/7"), q("2/9"), q("5/11")}, 3);
  for (int n : {2, 3}) {
    const auto up = series_pow_real(a, Rational(n));
    EXPECT_EQ(series_pow_real(up, Rational(1) / n), a) << n;
  }
}

TEST(SeriesProperty, MultiplicationCommutesAndAssociates) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  auto random_series = [&] {
    std::vector<Rational> c(6);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return QS(c);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series();
    const auto b = random_series();
    const auto c = random_series();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

}  // namespace
}  // namespace fracgen
