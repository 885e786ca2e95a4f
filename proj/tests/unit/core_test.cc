// Copyright 2026 The erwmoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "erw/errors.h"
#include "erw/params.h"
#include "erw/rational.h"
#include "erw/special.h"
#include "oracles.h"

namespace erw {
namespace {

using oracle::hp;
using oracle::HP;

Rational q(long n, long d = 1) { return make_rational(n, d); }

TEST(Params, RejectsOutOfRange) {
  EXPECT_THROW(ErwParams(q(1), q(0)), DomainError);
  EXPECT_THROW(ErwParams(q(-1), q(0)), DomainError);
  EXPECT_THROW(ErwParams(q(2), q(0)), DomainError);
  EXPECT_THROW(ErwParams(q(0), q(3, 2)), DomainError);
  EXPECT_NO_THROW(ErwParams(q(0), q(-1)));
  EXPECT_NO_THROW(ErwParams(q(99, 100), q(1)));
}

TEST(Params, ProbabilitiesRoundTrip) {
  for (long a = -9; a <= 9; ++a) {
    for (long b = -4; b <= 4; ++b) {
      const ErwParams p(q(a, 10), q(b, 4));
      EXPECT_GT(p.p(), 0);
      EXPECT_LT(p.p(), 1);
      EXPECT_GE(p.q(), 0);
      EXPECT_LE(p.q(), 1);
      EXPECT_EQ(2 * p.p() - 1, p.alpha());
      EXPECT_EQ(2 * p.q() - 1, p.beta());
      const ErwParams back = ErwParams::from_probabilities(p.p(), p.q());
      EXPECT_EQ(back.alpha(), p.alpha());
      EXPECT_EQ(back.beta(), p.beta());
    }
  }
}

TEST(Params, RegimeIsExact) {
  EXPECT_EQ(regime_of(q(1, 2)), Regime::kCritical);
  EXPECT_EQ(regime_of(q(499999, 1000000)), Regime::kDiffusive);
  EXPECT_EQ(regime_of(q(500001, 1000000)), Regime::kSuperdiffusive);
  EXPECT_EQ(ErwParams(q(-3, 4), q(0)).regime(), Regime::kDiffusive);
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6").value, q(1, 2));
  EXPECT_FALSE(parse_rational("3/6").inexact_in_binary);
  EXPECT_EQ(parse_rational("-0.25").value, q(-1, 4));
  EXPECT_FALSE(parse_rational("-0.25").inexact_in_binary);
  EXPECT_EQ(parse_rational("0.1").value, q(1, 10));
  EXPECT_TRUE(parse_rational("0.1").inexact_in_binary);
  EXPECT_EQ(parse_rational("2").value, q(2));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_EQ(to_string(q(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(q(5)), "5");
}

TEST(ReciprocalGamma, PolesAreZero) {
  for (int s = 0; s >= -6; --s) EXPECT_EQ(reciprocal_gamma(s), 0.0L) << s;
  EXPECT_EQ(reciprocal_gamma(1), 1.0L);
  EXPECT_NEAR(reciprocal_gamma(0.5L), static_cast<long double>(1 / sqrt(boost::math::constants::pi<HP>())), 1e-17L);
}

TEST(ReciprocalGamma, InvertsGamma) {
  for (long double s : {0.1L, 0.5L, 1.5L, 3.7L, -0.5L, -2.25L}) {
    const long double g = oracle::tgamma_hp(HP(static_cast<double>(s)));
    EXPECT_NEAR(reciprocal_gamma(s) * g, 1.0L, 1e-12L) << s;
  }
}

TEST(MeanScale, SmallCases) {
  EXPECT_EQ(mean_scale_exact(q(3, 10), 1), q(1));
  EXPECT_EQ(mean_scale_exact(q(1, 4), 2), q(5, 4));
  EXPECT_EQ(mean_scale_exact(q(1, 2), 3), q(15, 8));
}

TEST(MeanScale, FloatPathMatchesExact) {
  for (const Rational& a : {q(-1, 2), q(1, 4), q(1, 2), q(-3, 4)}) {
    for (std::int64_t n : {1, 2, 7, 50, 400}) {
      const long double exact = to_long_double(mean_scale_exact(a, n));
      EXPECT_NEAR(mean_scale(to_long_double(a), n) / exact, 1.0L, 1e-14L);
    }
  }
}

TEST(MeanScale, GrowsLikePowerOfN) {
  for (auto [num, den] : {std::pair{-1L, 2L}, {1L, 4L}, {1L, 2L}}) {
    const long double a = static_cast<long double>(num) / den;
    const std::int64_t n = 1000000;
    const long double g1a = oracle::tgamma_hp(1 + hp(num, den));
    EXPECT_NEAR(mean_scale(a, n) * g1a / std::pow(static_cast<long double>(n), a), 1.0L, 1e-3L);
  }
}

TEST(GammaRatio, Basics) {
  EXPECT_NEAR(gamma_ratio(0.3L, 0.3L, 10), 1.0L, 1e-15L);
  EXPECT_NEAR(gamma_ratio(1, 0, 7), 7.0L, 1e-13L);
  EXPECT_NEAR(gamma_ratio(0.5L, 0, 1000000) / 1000.0L, 1.0L, 1e-4L);
  EXPECT_NEAR(gamma_ratio(0.5L, 0, 1000000), oracle::gamma_ratio_hp(hp(1, 2), hp(0), 1000000), 1e-9L);
  EXPECT_THROW(gamma_ratio(-3, 0, 2), DomainError);
  EXPECT_THROW(gamma_ratio(0, -5, 5), DomainError);
}

TEST(ProductAsymptote, OffsetsAndConstants) {
  const auto m2 = product_asymptote(q(-2));
  EXPECT_EQ(m2.offset, 2);
  EXPECT_NEAR(m2.constant, 2.0L, 1e-15L);
  const auto z = product_asymptote(q(0));
  EXPECT_EQ(z.offset, 0);
  EXPECT_NEAR(z.constant, 1.0L, 1e-15L);
  const auto f = product_asymptote(q(2, 5));
  EXPECT_EQ(f.offset, 0);
  EXPECT_NEAR(f.constant, 1.0L / oracle::tgamma_hp(hp(7, 5)), 1e-15L);
}

TEST(ProductAsymptote, FiniteProductsConverge) {
  const std::int64_t n = 1000000;
  for (const Rational& delta : {q(-5, 2), q(-2), q(-1, 2), q(0), q(1, 3), q(1, 2)}) {
    const ProductAsymptote pa = product_asymptote(delta);
    const long double d = to_long_double(delta);
    long double prod = 1;
    for (std::int64_t j = pa.offset + 1; j <= n - 1; ++j) prod *= 1 + d / static_cast<long double>(j);
    EXPECT_NEAR(prod / (pa.constant * std::pow(static_cast<long double>(n), d)), 1.0L, 1e-3L) << to_string(delta);
  }
}

TEST(NormalMoment, Values) {
  EXPECT_EQ(normal_moment(5), 0u);
  EXPECT_EQ(normal_moment(4), 3u);
  EXPECT_EQ(normal_moment(6), 15u);
  EXPECT_EQ(normal_moment(12), 10395u);
  EXPECT_EQ(double_factorial_odd(5), 945);
}

TEST(EvenRateConstant, Values) {
  EXPECT_EQ(even_rate_constant(q(0)), q(-2, 3));
  EXPECT_EQ(even_rate_constant(q(-1, 2)), q(-1, 3));
  EXPECT_EQ(even_rate_constant(q(-1)), q(-2, 5));
  EXPECT_EQ(even_rate_constant(q(-1, 4)), q(-3, 8));
  EXPECT_THROW(even_rate_constant(q(1, 4)), DomainError);
  EXPECT_THROW(even_rate_constant(q(1, 10)), DomainError);
}

TEST(EvenRateConstant, MaximisedAtMinusOneHalf) {
  Rational best_alpha;
  Rational best = -100;
  for (long i = 0; i < 100; ++i) {
    const Rational a = q(-i, 100);
    const Rational c = even_rate_constant(a);
    if (c > best) {
      best = c;
      best_alpha = a;
    }
  }
  EXPECT_EQ(best_alpha, q(-1, 2));
  EXPECT_GT(even_rate_constant(q(-1, 2)), even_rate_constant(q(-1)));
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(12, 4), 495);
  EXPECT_EQ(binomial(24, 12), 2704156);
  EXPECT_EQ(binomial(5, 7), 0);
}

}  // namespace
}  // namespace erw
