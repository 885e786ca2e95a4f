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
#include <sstream>

#include "erw/asymptotics.h"
#include "erw/errors.h"
#include "erw/special.h"
#include "erw/summation.h"
#include "oracles.h"

namespace erw {
namespace {

using oracle::hp;
using oracle::HP;

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<Rational> fine_alpha_grid() {
  std::vector<Rational> out;
  for (long i = -19; i <= 10; ++i) out.push_back(q(i, 20));
  return out;
}

TEST(PredictRate, Examples) {
  const RatePrediction four = predict_rate(ErwParams(q(-1, 4), q(1)), 4);
  EXPECT_NEAR(four.coefficient, -0.375L, 1e-15L);
  EXPECT_EQ(four.decay, DecayKind::kPowerOfN);
  EXPECT_EQ(four.exponent, 1.0L);
  EXPECT_TRUE(predict_rate(ErwParams(q(0), q(1)), 2).identically_zero);
  EXPECT_TRUE(predict_rate(ErwParams(q(-1, 2), q(1)), 2).identically_zero);
  const RatePrediction crit = predict_rate(ErwParams(q(1, 2), q(1)), 2);
  EXPECT_NEAR(crit.coefficient, kEulerGamma, 1e-18L);
  EXPECT_EQ(crit.decay, DecayKind::kPowerOfLogN);
  EXPECT_EQ(crit.exponent, 1.0L);
  EXPECT_THROW(predict_rate(ErwParams(q(3, 4), q(1)), 2), DomainError);
}

TEST(PredictRate, CoefficientsAgainstHighPrecision) {
  // odd orders: beta sqrt(1 - 2a) / Gamma(1 + a) (2m - 1)!!
  const RatePrediction odd = predict_rate(ErwParams(q(1, 4), q(1, 2)), 3);
  EXPECT_NEAR(odd.coefficient, 0.5L * std::sqrt(0.5L) / oracle::tgamma_hp(hp(5, 4)) * 3, 1e-15L);
  const RatePrediction odd_crit = predict_rate(ErwParams(q(1, 2), q(1)), 5);
  EXPECT_NEAR(odd_crit.coefficient, 2 / std::sqrt(kPi) * 15, 1e-14L);
  EXPECT_EQ(odd_crit.exponent, 0.5L);
  // order 2: -1 / Gamma(2a); order 2m above zero: -m / Gamma(2a)
  EXPECT_NEAR(predict_rate(ErwParams(q(1, 4), q(0)), 2).coefficient, -1 / oracle::tgamma_hp(hp(1, 2)), 1e-15L);
  EXPECT_NEAR(predict_rate(ErwParams(q(1, 4), q(0)), 6).coefficient, -3 / oracle::tgamma_hp(hp(1, 2)), 1e-15L);
  EXPECT_NEAR(predict_rate(ErwParams(q(-1, 4), q(0)), 2).coefficient, -1 / oracle::tgamma_hp(hp(-1, 2)), 1e-15L);
  // 2m at alpha <= 0: m (m - 1) / 2 * c(alpha)
  EXPECT_NEAR(predict_rate(ErwParams(q(0), q(0)), 6).coefficient, 3 * (-2.0L / 3), 1e-15L);
  EXPECT_NEAR(predict_rate(ErwParams(q(1, 2), q(0)), 6).coefficient, 3 * kEulerGamma, 1e-15L);
}

TEST(PredictRate, ExponentPanels) {
  for (const Rational& a : fine_alpha_grid()) {
    const long double x = to_long_double(a);
    for (int k = 1; k <= 12; ++k) {
      const RatePrediction p = predict_rate(ErwParams(a, q(1)), k);
      if (a == q(1, 2)) {
        EXPECT_EQ(p.decay, DecayKind::kPowerOfLogN);
        EXPECT_EQ(p.exponent, k % 2 ? 0.5L : 1.0L);
        continue;
      }
      EXPECT_EQ(p.decay, DecayKind::kPowerOfN);
      long double want;
      if (k % 2 == 1) {
        want = (1 - 2 * x) / 2;
      } else if (k == 2) {
        want = 1 - 2 * x;
      } else {
        want = x <= 0 ? 1 : 1 - 2 * x;
      }
      EXPECT_NEAR(p.exponent, want, 1e-18L) << to_string(a) << " k=" << k;
      EXPECT_EQ(p.identically_zero, k == 2 && (a == 0 || a == q(-1, 2))) << to_string(a) << " k=" << k;
      EXPECT_TRUE(std::isfinite(p.coefficient));
    }
  }
}

TEST(PredictRate, ZeroBetaMakesOddOrdersVanish) {
  EXPECT_TRUE(predict_rate(ErwParams(q(1, 4), q(0)), 3).identically_zero);
  EXPECT_FALSE(predict_rate(ErwParams(q(1, 4), q(0)), 4).identically_zero);
}

TEST(PredictRate, EvaluateAndCsv) {
  const RatePrediction p = predict_rate(ErwParams(q(-1, 4), q(1)), 4);
  EXPECT_NEAR(p.evaluate(1000), -0.375L / 1000, 1e-18L);
  std::ostringstream out;
  write_predictions_csv(out, {p});
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "alpha,order,gamma_exponent,coefficient,decay_kind");
  EXPECT_NE(out.str().find("-1/4,4,1,"), std::string::npos);
  EXPECT_NE(out.str().find("power_of_n"), std::string::npos);
}

TEST(VarianceAsymptote, Branches) {
  EXPECT_NEAR(variance_asymptote(ErwParams(q(0), q(0)), 1e4L), 1e4L, 1e-10L);
  const long double n = std::nearbyint(std::exp(10.0L));
  EXPECT_NEAR(variance_asymptote(ErwParams(q(1, 2), q(0)), n) / (10 * n), 1.0L, 1e-4L);
  const long double want = 2e6L / oracle::tgamma_hp(hp(3, 2));
  EXPECT_NEAR(variance_asymptote(ErwParams(q(3, 4), q(0)), 1e4L) / want, 1.0L, 1e-14L);
}

TEST(BerryEsseen, Examples) {
  const long double e = std::exp(1.0L);
  EXPECT_NEAR(berry_esseen_shape(ErwParams(q(-1, 2), q(0)), std::exp(4.0L)), 4 / (e * e), 1e-15L);
  EXPECT_NEAR(berry_esseen_shape(ErwParams(q(1, 4), q(0)), 1e4L), std::log(1e4L) / 10, 1e-15L);
  EXPECT_NEAR(berry_esseen_shape(ErwParams(q(1, 2), q(0)), std::exp(e * e)), 2 / e, 1e-15L);
  EXPECT_NEAR(berry_esseen_shape(ErwParams(q(0), q(0)), 1e4L), std::log(1e4L) / 100, 1e-15L);
}

TEST(BerryEsseen, DecreasingPastItsPeak) {
  for (const Rational& a : {q(-9, 10), q(-3, 4), q(-1, 2), q(-1, 4), q(-1, 10), q(0), q(1, 10), q(1, 4), q(2, 5),
                            q(1, 2)}) {
    const ErwParams p(a, q(0));
    const long double x = to_long_double(a);
    const long double peak = a == q(1, 2) ? std::exp(std::exp(2.0L)) : std::exp(2 / (1 - 2 * std::max(x, 0.0L)));
    const long double start = std::max(10.0L, std::ceil(peak));
    long double prev = berry_esseen_shape(p, start);
    for (long double n = start + 1; n < 1e7L; n = std::ceil(n * 1.3L)) {
      const long double v = berry_esseen_shape(p, n);
      EXPECT_LT(v, prev) << to_string(a) << " n=" << n;
      prev = v;
    }
  }
}

TEST(NormalisingSums, CriticalSmallCase) {
  const VarianceSums v = variance_sums(ErwParams(q(1, 2), q(0)), 3);
  HP s2 = 0;
  for (int i = 1; i <= 3; ++i) s2 += pow(boost::math::tgamma(HP(i)) / boost::math::tgamma(HP(i) + hp(1, 2)), 2);
  EXPECT_NEAR(v.s2, static_cast<long double>(s2), 1e-16L);
  EXPECT_NEAR(v.s2, 1556 / (225 * kPi), 1e-16L);
  const HP sigma2 = pow(boost::math::tgamma(HP(3)) / boost::math::tgamma(hp(7, 2)), 2) * 3 * log(HP(3));
  EXPECT_NEAR(v.sigma2, static_cast<long double>(sigma2), 1e-16L);
}

TEST(NormalisingSums, RatioConvergesAtTheStatedRate) {
  EXPECT_NEAR(std::sqrt([] {
                const VarianceSums v = variance_sums(ErwParams(q(1, 4), q(0)), 10000);
                return v.s2 / v.sigma2;
              }()),
              1.0L, 1e-2L);
  for (const Rational& a : {q(-1, 2), q(1, 4)}) {
    const ErwParams p(a, q(0));
    const long double rate = std::min(1.0L, 1 - 2 * to_long_double(a));
    long double lo = 1e300L, hi = 0;
    for (std::int64_t n = 100; n <= 100000; n *= 10) {
      const VarianceSums v = variance_sums(p, n);
      const long double scaled =
          std::fabs(std::sqrt(v.s2 / v.sigma2) - 1) * std::pow(static_cast<long double>(n), rate);
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
    }
    EXPECT_GT(lo, 0.0L);
    EXPECT_LT(hi / lo, 1.5L) << to_string(a);
  }
}

TEST(NormalisingSums, WendelSandwich) {
  for (long double x : {1.0L, 5.0L, 100.0L}) {
    const long double a = 0.25L;
    const long double r = wendel_ratio(x, a);
    EXPECT_LE(std::pow(x / (x + a), 1 - a), r);
    EXPECT_LE(r, 1.0L);
    const HP hx(static_cast<double>(x));
    const long double want =
        static_cast<long double>(boost::math::tgamma(hx + hp(1, 4)) / (pow(hx, hp(1, 4)) * boost::math::tgamma(hx)));
    EXPECT_NEAR(r, want, 1e-15L);
  }
}

TEST(LogPowerSum, Examples) {
  const std::int64_t n = 1000000;
  HP harmonic = 0;
  for (std::int64_t j = 1; j <= n; ++j) harmonic += HP(1) / j;
  const long double l = std::log(1e6L);
  EXPECT_NEAR(log_power_sum(1, n), static_cast<long double>(harmonic) / l, 1e-15L);
  EXPECT_LT(std::fabs(log_power_sum(1, n) - 1), kEulerGamma / l + 1e-6L);
  EXPECT_NEAR(log_power_sum(2, n), 1.0L, 0.05L);
  EXPECT_NEAR(log_power_sum(1, 2), 1.5L / std::log(2.0L), 1e-15L);
}

TEST(Summation, StolzCesaroTelescopes) {
  // a_n = sum of increments of n^0.3, b_n = n^0.3.
  const std::int64_t n = 1000000;
  CompensatedSum<long double> a;
  long double prev = 0;
  for (std::int64_t j = 1; j <= n; ++j) {
    const long double cur = std::pow(static_cast<long double>(j), 0.3L);
    a += cur - prev;
    prev = cur;
  }
  EXPECT_NEAR(a.value() / std::pow(static_cast<long double>(n), 0.3L), 1.0L, 1e-3L);
}

TEST(Summation, CompensationRecoversLostBits) {
  CompensatedSum<double> s(1.0);
  double naive = 1.0;
  for (int i = 0; i < 1000000; ++i) {
    s += 1e-16;
    naive += 1e-16;
  }
  EXPECT_EQ(naive, 1.0);
  EXPECT_NEAR(s.value(), 1.0 + 1e-10, 1e-22);
}

}  // namespace
}  // namespace erw
