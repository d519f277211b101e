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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fracgen/errors.hpp"

namespace fracgen {
namespace {

Rational q(const char* text) { return parse_rational(text); }

std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

// Coefficients of (sum_k beta_k z^k)^alpha up to z^K by writing it as
// beta_0^alpha (1 + u)^alpha, u = (beta_1 z + ... ) / beta_0, and summing
// C(alpha, j) u^j term by term.
std::vector<double> binomial_expansion(const std::vector<double>& beta, double alpha, int K) {
  std::vector<double> u(K + 1, 0.0);
  for (std::size_t k = 1; k < beta.size() && static_cast<int>(k) <= K; ++k) u[k] = beta[k] / beta[0];
  std::vector<double> out(K + 1, 0.0);
  std::vector<double> upow(K + 1, 0.0);
  upow[0] = 1.0;
  double binom = 1.0;
  for (int j = 0; j <= K; ++j) {
    for (int i = 0; i <= K; ++i) out[i] += binom * upow[i];
    std::vector<double> next(K + 1, 0.0);
    for (int a = 0; a <= K; ++a) {
      for (int b = 1; a + b <= K; ++b) next[a + b] += upow[a] * u[b];
    }
    upow = next;
    binom *= (alpha - j) / (j + 1);
  }
  const double scale = std::pow(beta[0], alpha);
  for (auto& x : out) x *= scale;
  return out;
}

TEST(BetaTableTest, ShiftedSecondOrder) {
  EXPECT_EQ(beta_table<Rational>(2, Rational(1), q("3/2")).beta, qs({"5/6", "-2/3", "-1/6"}));
}

TEST(BetaTableTest, UnshiftedSecondOrderIsLubich) {
  for (const char* a : {"11/10", "3/2", "2"}) {
    EXPECT_EQ(beta_table<Rational>(2, Rational(0), q(a)).beta, qs({"3/2", "-2", "1/2"}));
  }
}

TEST(BetaTableTest, FirstOrderIgnoresShift) {
  for (int r : {0, 1, 2}) {
    EXPECT_EQ(beta_table<Rational>(1, Rational(r), q("17/10")).beta, qs({"1", "-1"}));
  }
}

TEST(BetaTableTest, ShiftedSecondOrderAtAlphaTwo) {
  EXPECT_EQ(beta_table<Rational>(2, Rational(1), Rational(2)).beta, qs({"1", "-1", "0"}));
}

TEST(BetaTableTest, UnsupportedOrder) {
  EXPECT_THROW(beta_table<double>(0, 1.0, 1.5), UnsupportedOrder);
  EXPECT_THROW(beta_table<double>(7, 1.0, 1.5), UnsupportedOrder);
  EXPECT_THROW(lubich_generator<double>(7, 1.5), UnsupportedOrder);
}

TEST(BetaTableTest, ZeroShiftMatchesLubichForAllOrders) {
  for (int p = 1; p <= 6; ++p) {
    EXPECT_EQ(beta_table<Rational>(p, Rational(0), q("13/10")).beta,
              lubich_generator<Rational>(p, q("13/10")).beta)
        << "p=" << p;
  }
}

TEST(ConstructBetaTest, Examples) {
  EXPECT_EQ(construct_beta<Rational>(2, Rational(1), q("3/2")).beta, qs({"5/6", "-2/3", "-1/6"}));
  EXPECT_EQ(construct_beta<Rational>(1, Rational(0), q("13/10")).beta, qs({"1", "-1"}));
  EXPECT_EQ(construct_beta<Rational>(3, Rational(1), Rational(2)).beta,
            beta_table<Rational>(3, Rational(1), Rational(2)).beta);
}

TEST(ConstructBetaTest, ExactAgreementWithTable) {
  for (int p = 1; p <= 6; ++p) {
    for (int r : {0, 1, 2}) {
      for (const char* a : {"11/10", "3/2", "19/10", "2"}) {
        EXPECT_EQ(construct_beta<Rational>(p, Rational(r), q(a)).beta,
                  beta_table<Rational>(p, Rational(r), q(a)).beta)
            << "p=" << p << " r=" << r << " alpha=" << a;
      }
    }
  }
}

TEST(ConstructBetaTest, FloatingAgreementWithTable) {
  for (int p = 1; p <= 6; ++p) {
    for (double r : {0.0, 1.0, 2.0}) {
      for (double a : {1.1, 1.5, 1.9, 2.0}) {
        const auto built = construct_beta<double>(p, r, a).beta;
        const auto table = beta_table<double>(p, r, a).beta;
        for (int k = 0; k <= p; ++k) {
          EXPECT_NEAR(built[k], table[k], 1e-10 * std::max(1.0, std::abs(table[k])));
        }
      }
    }
  }
}

TEST(LubichTest, Rows) {
  EXPECT_EQ(lubich_generator<Rational>(1, Rational(1)).beta, qs({"1", "-1"}));
  EXPECT_EQ(lubich_generator<Rational>(2, Rational(1)).beta, qs({"3/2", "-2", "1/2"}));
  EXPECT_EQ(lubich_generator<Rational>(6, Rational(1)).beta,
            qs({"49/20", "-6", "15/2", "-20/3", "15/4", "-6/5", "1/6"}));
  EXPECT_EQ(lubich_generator<Rational>(4, Rational(1)).shift, 0);
}

TEST(WeightsTest, IntegerAlpha) {
  const GeneratorSpec first{1.0, 1, 0.0, {1.0, -1.0}};
  EXPECT_EQ(grunwald_weights(first, 3).weights, (std::vector<double>{1, -1, 0, 0}));
  const GeneratorSpec second{2.0, 1, 0.0, {1.0, -1.0}};
  EXPECT_EQ(grunwald_weights(second, 3).weights, (std::vector<double>{1, -2, 1, 0}));
}

TEST(WeightsTest, ShiftedSecondOrderLeadingWeights) {
  const auto w = grunwald_weights(beta_table<double>(2, 1.0, 1.5), 1);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w[0], std::pow(5.0 / 6.0, 1.5), 1e-15);
  EXPECT_NEAR(w[1], 1.5 * std::sqrt(5.0 / 6.0) * (-2.0 / 3.0), 1e-15);
  EXPECT_NEAR(w[0], 0.7607, 1e-4);
  EXPECT_NEAR(w[1], -0.9129, 1e-4);
}

TEST(WeightsTest, RecurrenceMatchesBinomialOracle) {
  for (int p = 1; p <= 3; ++p) {
    for (double r : {0.0, 1.0}) {
      for (double a : {1.1, 1.5, 1.9, 2.0}) {
        const auto g = beta_table<double>(p, r, a);
        const auto w = grunwald_weights(g, 12);
        const auto oracle = binomial_expansion(g.beta, a, 12);
        for (int k = 0; k <= 12; ++k) {
          EXPECT_NEAR(w[k], oracle[k], 1e-12 * std::max(1.0, std::abs(oracle[k])))
              << "p=" << p << " r=" << r << " alpha=" << a << " k=" << k;
        }
      }
    }
  }
}

TEST(WeightsTest, NonPositiveLeadingBetaIsDomainError) {
  const GeneratorSpec g{1.5, 1, 0.0, {-1.0, 1.0}};
  EXPECT_THROW(grunwald_weights(g, 4), DomainError);
}

TEST(VerifyOrderTest, ShiftedSecondOrder) {
  const auto report = verify_order(beta_table<Rational>(2, Rational(1), q("3/2")), 2);
  EXPECT_TRUE(report.exact);
  EXPECT_EQ(report.observed_order, 2);
  EXPECT_DOUBLE_EQ(report.leading_coeff, 1.0 / 6.0);
}

TEST(VerifyOrderTest, LubichFourthOrder) {
  EXPECT_EQ(verify_order(lubich_generator<Rational>(4, q("3/2")), 4).observed_order, 4);
}

TEST(VerifyOrderTest, ShiftedLubichDropsToFirstOrder) {
  const auto g = with_shift(lubich_generator<Rational>(4, q("3/2")), Rational(1));
  const auto report = verify_order(g, 4);
  EXPECT_EQ(report.observed_order, 1);
  EXPECT_FALSE(report.passed());
}

TEST(VerifyOrderTest, ShiftedFirstOrderAtAlphaTwoIsCentered) {
  // Shift 1 at alpha = 2 reads u_{i+1} - 2 u_i + u_{i-1}, the centered second
  // difference, whose symbol is 1 + z^2 / 12 + O(z^4).
  const auto g = with_shift(lubich_generator<Rational>(1, Rational(2)), Rational(1));
  const auto report = verify_order(g, 1);
  EXPECT_EQ(report.observed_order, 2);
  EXPECT_DOUBLE_EQ(report.leading_coeff, 1.0 / 12.0);
  for (int p = 2; p <= 6; ++p) {
    const auto h = with_shift(lubich_generator<Rational>(p, Rational(2)), Rational(1));
    EXPECT_EQ(verify_order(h, 1).observed_order, 1) << "p=" << p;
  }
}

TEST(VerifyOrderTest, HalfAlphaShift) {
  const GeneratorSpec g{1.5, 1, 0.75, {1.0, -1.0}};
  const auto report = verify_order(g, 2);
  EXPECT_EQ(report.observed_order, 2);
  // alpha / 24, see the sinh factorization in series_test.
  EXPECT_NEAR(report.leading_coeff, 0.0625, 1e-12);
}

TEST(VerifyOrderTest, FloatingAndExactAgree) {
  for (int p = 1; p <= 6; ++p) {
    const auto exact = verify_order(beta_table<Rational>(p, Rational(1), q("3/2")), p);
    const auto floating = verify_order(beta_table<double>(p, 1.0, 1.5), p);
    EXPECT_EQ(exact.observed_order, floating.observed_order) << "p=" << p;
    EXPECT_NEAR(exact.leading_coeff, floating.leading_coeff, 1e-9) << "p=" << p;
  }
}

TEST(VerifyOrderTest, InconsistentGenerator) {
  ExactGenerator g{q("3/2"), 1, Rational(0), qs({"1", "-1/2"})};
  EXPECT_THROW(verify_order(g, 1), ConsistencyError);
}

TEST(A2CoefficientTest, Values) {
  EXPECT_EQ(a2_coefficient<Rational>(Rational(1), Rational(2)), q("1/12"));
  EXPECT_EQ(a2_coefficient<Rational>(Rational(1), Rational(1)), q("1/6"));
  EXPECT_NEAR(a2_coefficient(1.0, std::sqrt(1.5)), 1.0 - std::sqrt(6.0) / 3.0, 1e-15);
  EXPECT_NEAR(a2_coefficient(1.0, std::sqrt(1.5)), 0.18350, 1e-5);
}

TEST(A2CoefficientTest, MatchesSymbolCoefficient) {
  for (const char* a : {"1", "11/10", "3/2", "19/10", "2"}) {
    for (int r : {0, 1}) {
      const auto report = verify_order(beta_table<Rational>(2, Rational(r), q(a)), 2);
      ASSERT_GE(report.coefficients.size(), 3u);
      EXPECT_DOUBLE_EQ(report.coefficients[2],
                       to_double(a2_coefficient<Rational>(Rational(r), q(a))))
          << "alpha=" << a << " r=" << r;
    }
  }
}

TEST(ConvexCombinationTest, SecondOrder) {
  EXPECT_EQ(convex_combination_check<Rational>(1, 0, q("3/2")).observed_order, 2);
  EXPECT_EQ(convex_combination_check<Rational>(1, -1, q("3/2")).observed_order, 2);
}

TEST(ConvexCombinationTest, LeadingCoefficient) {
  const auto report = convex_combination_check<Rational>(1, 0, Rational(2));
  EXPECT_EQ(report.observed_order, 2);
  EXPECT_DOUBLE_EQ(report.leading_coeff, 1.0 / 12.0);
  EXPECT_EQ(convex_combination_leading_coefficient<Rational>(1, 0, Rational(2)), q("1/12"));
  const auto other = convex_combination_check<Rational>(1, -1, q("3/2"));
  EXPECT_DOUBLE_EQ(other.leading_coeff,
                   to_double(convex_combination_leading_coefficient<Rational>(1, -1, q("3/2"))));
}

TEST(ConvexCombinationTest, EqualShiftsRejected) {
  EXPECT_THROW(convex_combination_check<double>(1, 1, 1.5), UsageError);
}

}  // namespace
}  // namespace fracgen
