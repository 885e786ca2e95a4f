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
#include <numeric>
#include <sstream>

#include "erw/asymptotics.h"
#include "erw/deviations.h"
#include "erw/errors.h"
#include "erw/moments.h"
#include "erw/special.h"
#include "oracles.h"

namespace erw {
namespace {

using oracle::hp;

Rational q(long n, long d = 1) { return make_rational(n, d); }

long double ld(std::int64_t n) { return static_cast<long double>(n); }

// M_n^(2m) from the exact moment: E[S^2m] / ((2m-1)!! (n / (1 - 2a))^m) - 1,
// formed as a rational before rounding.
long double exact_subcritical_deviation(const Rational& alpha, const Rational& moment, int m, std::int64_t n) {
  Rational var = Rational(n) / (1 - 2 * alpha);
  Rational scale = Rational(double_factorial_odd(m));
  for (int i = 0; i < m; ++i) scale *= var;
  return to_long_double(moment / scale - 1);
}

TEST(Grid, GeometricAndInclusive) {
  const auto g = geometric_grid(1, 1000000);
  EXPECT_EQ(g.front(), 1);
  EXPECT_EQ(g.back(), 1000000);
  EXPECT_TRUE(std::adjacent_find(g.begin(), g.end(), std::greater_equal<>()) == g.end());
  // about 40 points per factor of ten once the integer floor stops merging them
  const auto tail = std::count_if(g.begin(), g.end(), [](std::int64_t n) { return n > 100000; });
  EXPECT_NEAR(static_cast<double>(tail), 40.0, 1.0);
  EXPECT_THROW(geometric_grid(10, 5), ContractViolation);
}

TEST(SecondExact, Examples) {
  EXPECT_EQ(deviation_second_exact(ErwParams(q(0), q(0)), 5), 0.0L);
  EXPECT_EQ(deviation_second_exact(ErwParams(q(-1, 2), q(0)), 2), 0.0L);
  EXPECT_NEAR(deviation_second_exact(ErwParams(q(1, 4), q(0)), 2), -0.375L, 1e-16L);
  EXPECT_THROW(deviation_second_exact(ErwParams(q(1, 2), q(0)), 5), DomainError);
}

TEST(SecondExact, MatchesHighPrecisionGamma) {
  const std::int64_t n = 12345;
  const long double want = -oracle::gamma_ratio_hp(hp(1, 2), hp(1), n) / oracle::tgamma_hp(hp(1, 2));
  EXPECT_NEAR(deviation_second_exact(ErwParams(q(1, 4), q(0)), n) / want, 1.0L, 1e-14L);
}

TEST(Subcritical, SecondOrderMatchesClosedForm) {
  const ErwParams p(q(1, 4), q(0));
  const auto grid = geometric_grid(1, 10000);
  const DeviationSeries s = deviation_recursion_subcritical(p, 2, grid);
  ASSERT_EQ(s.values.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(s.values[i] / deviation_second_exact(p, grid[i]), 1.0L, 1e-10L) << grid[i];
  }
}

TEST(Subcritical, AgreesWithExactMoments) {
  const auto grid = geometric_grid(1, 1000);
  for (const Rational& a : {q(-3, 4), q(-1, 2), q(-1, 4), q(0), q(1, 4), q(2, 5)}) {
    const ErwParams p(a, q(1, 3));
    const SubcriticalTrace tr = run_subcritical_deviations(p, 3, grid);
    ExactMomentRecursion rec(p, 6);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rec.advance_to(grid[i]);
      for (int m = 1; m <= 3; ++m) {
        const long double want = exact_subcritical_deviation(a, rec.moment(2 * m), m, grid[i]);
        const long double got = tr.orders[static_cast<std::size_t>(m - 1)].deviation[i];
        if (want == 0) {
          EXPECT_LT(std::fabs(got), 1e-15L);
        } else {
          EXPECT_NEAR(got / want, 1.0L, 1e-9L) << to_string(a) << " m=" << m << " n=" << grid[i];
        }
      }
    }
  }
}

TEST(Subcritical, DegenerateSecondOrderIsExactlyZero) {
  const auto grid = geometric_grid(1, 100000, 10);
  const DeviationSeries zero = deviation_recursion_subcritical(ErwParams(q(0), q(0)), 2, grid);
  for (long double v : zero.values) EXPECT_EQ(v, 0.0L);
  const DeviationSeries half = deviation_recursion_subcritical(ErwParams(q(-1, 2), q(0)), 2, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= 2) {
      EXPECT_EQ(half.values[i], 0.0L) << grid[i];
    }
  }
}

TEST(Subcritical, DecompositionSumsToDeviation) {
  const auto grid = geometric_grid(1, 100000, 10);
  for (const Rational& a : {q(-3, 4), q(-1, 4), q(1, 4)}) {
    const SubcriticalTrace tr = run_subcritical_deviations(ErwParams(a, q(0)), 3, grid);
    for (const auto& o : tr.orders) {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= o.offset) continue;
        const long double sum = o.homogeneous[i] + o.forced_by_lower[i] + o.forced_by_inhomogeneity[i];
        EXPECT_NEAR(sum, o.deviation[i], 1e-12L * (1 + std::fabs(o.deviation[i])));
      }
    }
  }
}

TEST(Subcritical, GrowthFactorSignPastOffset) {
  for (const Rational& a : {q(-3, 4), q(-1, 2), q(-1, 4), q(0), q(1, 4)}) {
    const ErwParams p(a, q(0));
    const auto grid = geometric_grid(1, 200, 40);
    const SubcriticalTrace tr = run_subcritical_deviations(p, 4, grid);
    for (int m = 1; m <= 4; ++m) {
      const auto& o = tr.orders[static_cast<std::size_t>(m - 1)];
      const long double two_m_alpha = 2 * m * to_long_double(a);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= o.offset) continue;
        EXPECT_NE(o.coefficients[i].g, 0.0L);
        if (ld(grid[i]) > -two_m_alpha) {
          EXPECT_GT(o.coefficients[i].g, 0.0L) << m << " " << grid[i];
        }
      }
    }
  }
}

TEST(Subcritical, LeadingRates) {
  const std::int64_t n = 1000000;
  const auto m4_zero = deviation_recursion_subcritical(ErwParams(q(0), q(0)), 4, std::vector<std::int64_t>{n});
  EXPECT_NEAR(ld(n) * m4_zero.values[0] / (-2.0L / 3), 1.0L, 0.05L);
  const auto m4_quarter = deviation_recursion_subcritical(ErwParams(q(1, 4), q(0)), 4, std::vector<std::int64_t>{n});
  const long double target = -2.0L / oracle::tgamma_hp(hp(1, 2));
  EXPECT_NEAR(std::sqrt(ld(n)) * m4_quarter.values[0] / target, 1.0L, 0.05L);
}

TEST(Subcritical, InhomogeneityLimits) {
  const std::vector<std::int64_t> grid{1000000};
  for (const Rational& a : {q(-3, 4), q(-1, 4)}) {
    const long double aa = to_long_double(a);
    const ErwParams p(a, q(0));
    const SubcriticalTrace tr = run_subcritical_deviations(p, 2, grid);
    const auto& o = tr.orders[1];
    // Oracle limits written out from the definitions, m = 2.
    const long double c4 = -2 * (2 * aa * aa + 1) / (3 * (1 - 4 * aa));
    const long double h_limit = -(2.0L / 3) * (2 * aa * aa + 1);
    const long double forced_limit = (1 - 4 * aa) * c4 / (2 * (1 - 2 * aa) - 1);
    const long double nn = 1e6L;
    EXPECT_NEAR(nn * o.forced_by_inhomogeneity[0] / forced_limit, 1.0L, 0.05L);
    EXPECT_NEAR(nn * nn * o.coefficients[0].h / h_limit, 1.0L, 0.01L);
    EXPECT_NEAR(nn * nn * inhomogeneity(p, 2, 1000000) / h_limit, 1.0L, 0.01L);
    EXPECT_NEAR(inhomogeneity_limit(a, 2), h_limit, 1e-15L);
    EXPECT_NEAR(forced_inhomogeneity_limit(a, 2), forced_limit, 1e-15L);
  }
}

TEST(Subcritical, RejectsCriticalAndAbove) {
  EXPECT_THROW(deviation_recursion_subcritical(ErwParams(q(1, 2), q(0)), 4, 100), DomainError);
  EXPECT_THROW(deviation_recursion_subcritical(ErwParams(q(3, 4), q(0)), 4, 100), DomainError);
  EXPECT_THROW(deviation_series(ErwParams(q(3, 4), q(0)), 4, {10, 20}), DomainError);
}

TEST(Critical, AuxiliaryIsHarmonicForSecondOrder) {
  const CriticalTrace tr = run_critical_deviations(ErwParams(q(1, 2), q(0)), 1, {2, 3, 10});
  EXPECT_NEAR(tr.orders[0].auxiliary[1], 11.0L / 6, 1e-18L);
  EXPECT_NEAR(tr.orders[0].auxiliary[2], 7381.0L / 2520, 1e-17L);
}

TEST(Critical, SecondOrderEulerConstant) {
  const auto s = deviation_recursion_critical(ErwParams(q(1, 2), q(0)), 2, std::vector<std::int64_t>{10000});
  EXPECT_NEAR(std::log(1e4L) * s.values[0], kEulerGamma, 1e-3L);
}

TEST(Critical, AgreesWithExactMoments) {
  const ErwParams p(q(1, 2), q(0));
  const auto grid = geometric_grid(2, 1000);
  const CriticalTrace tr = run_critical_deviations(p, 3, grid);
  ExactMomentRecursion rec(p, 6);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rec.advance_to(grid[i]);
    const long double nl = ld(grid[i]) * std::log(ld(grid[i]));
    for (int m = 1; m <= 3; ++m) {
      const long double want = to_long_double(rec.moment(2 * m) / Rational(double_factorial_odd(m))) /
                                   std::pow(nl, static_cast<long double>(m)) - 1;
      EXPECT_NEAR(tr.orders[static_cast<std::size_t>(m - 1)].deviation[i], want, 1e-9L) << m << " " << grid[i];
    }
  }
}

TEST(Critical, DecompositionIdentity) {
  const auto grid = geometric_grid(2, 1000000, 10);
  const CriticalTrace tr = run_critical_deviations(ErwParams(q(1, 2), q(0)), 3, grid);
  for (const auto& o : tr.orders) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_NEAR(o.part_i[i] + o.part_j[i] + o.part_k[i], o.deviation[i], 1e-10L) << o.order << " " << grid[i];
    }
  }
}

TEST(Critical, CorrectionTermsStayBounded) {
  const auto grid = geometric_grid(1000, 1000000, 10);
  const CriticalTrace tr = run_critical_deviations(ErwParams(q(1, 2), q(0)), 2, grid);
  const auto& o = tr.orders[1];
  std::vector<long double> si, sj;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const long double l2 = std::pow(std::log(ld(grid[i])), 2.0L);
    si.push_back(l2 * o.part_i[i]);
    sj.push_back(l2 * o.part_j[i]);
    EXPECT_LT(std::fabs(si.back()), 5.0L);
    EXPECT_LT(std::fabs(sj.back()), 5.0L);
  }
  // Increments per decade shrink, so the scaled terms are not drifting off.
  const std::size_t d = 10;
  EXPECT_LT(std::fabs(sj[3 * d] - sj[2 * d]), std::fabs(sj[d] - sj[0]));
}

TEST(Critical, FourthOrderApproachesLimitFromBelow) {
  const std::vector<std::int64_t> grid{10000, 1000000};
  const auto s = deviation_recursion_critical(ErwParams(q(1, 2), q(0)), 4, grid);
  const long double a = std::log(1e4L) * s.values[0];
  const long double b = std::log(1e6L) * s.values[1];
  EXPECT_LT(a, b);
  EXPECT_LT(b, 2 * kEulerGamma);
  // Same quantity by the direct float moment recursion.
  FloatMomentRecursion f(ErwParams(q(1, 2), q(0)), 4);
  f.advance_to(10000);
  const long double nl = 1e4L * std::log(1e4L);
  EXPECT_NEAR(f.moment(4) / (3 * nl * nl) - 1, s.values[0], 1e-9L);
}

TEST(Critical, RequiresExactHalf) {
  EXPECT_THROW(deviation_recursion_critical(ErwParams(q(499, 1000), q(0)), 2, 100), DomainError);
  EXPECT_THROW(run_critical_deviations(ErwParams(q(1, 2), q(0)), 1, {1, 5}), ContractViolation);
}

TEST(Odd, ZeroBetaGivesZeros) {
  const auto s = deviation_odd(ErwParams(q(1, 4), q(0)), 3, geometric_grid(1, 1000, 10));
  for (long double v : s.values) EXPECT_EQ(v, 0.0L);
}

TEST(Odd, FirstOrderCoefficient) {
  const auto s = deviation_odd(ErwParams(q(1, 4), q(1)), 1, {1000000});
  const long double want = std::sqrt(0.5L) / oracle::tgamma_hp(hp(5, 4));
  EXPECT_NEAR(std::pow(1e6L, 0.25L) * s.values[0] / want, 1.0L, 0.01L);
}

TEST(Odd, CriticalThirdOrder) {
  const auto s = deviation_odd(ErwParams(q(1, 2), q(1)), 3, {1000000});
  EXPECT_EQ(s.normalization, Normalization::kCritical);
  const long double want = 3 * 2 / std::sqrt(kPi);
  EXPECT_NEAR(std::sqrt(std::log(1e6L)) * s.values[0] / want, 1.0L, 0.10L);
}

TEST(FirstOrder, TrivialSolutions) {
  const std::int64_t n_max = 50;
  std::vector<long double> zero(n_max, 0.0L), one(n_max, 1.0L);
  const auto c = solve_first_order_recursion(7, zero, one, 3, n_max);
  EXPECT_EQ(c.first, 4);
  for (long double v : c.values) EXPECT_EQ(v, 7.0L);
  const auto t = solve_first_order_recursion(0, one, one, 3, n_max);
  for (std::int64_t n = 4; n <= n_max; ++n) EXPECT_EQ(t.at(n), ld(n - 3 - 1));
  std::vector<long double> g = one;
  g[10] = 0;
  EXPECT_THROW(solve_first_order_recursion(1, one, g, 3, n_max), ContractViolation);
  EXPECT_NO_THROW(solve_first_order_recursion(1, one, g, 10, n_max));
}

TEST(FirstOrder, ReproducesOddMomentRecursion) {
  // E[S^3_{n+1}] = (1 + 3a/n) E[S^3_n] + (3 + a/n) E[S_n].
  const ErwParams p(q(1, 4), q(1));
  const long double a = 0.25L;
  const std::int64_t n_max = 1000;
  std::vector<long double> f(n_max + 1), g(n_max + 1);
  FloatMomentRecursion rec(p, 3);
  std::vector<long double> direct(n_max + 1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    rec.advance_to(n);
    direct[static_cast<std::size_t>(n)] = rec.moment(3);
    g[static_cast<std::size_t>(n)] = 1 + 3 * a / ld(n);
    f[static_cast<std::size_t>(n)] = (3 + a / ld(n)) * rec.moment(1);
  }
  const auto sol = solve_first_order_recursion(1.0L, f, g, 0, n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    EXPECT_NEAR(sol.at(n) / direct[static_cast<std::size_t>(n)], 1.0L, 1e-12L) << n;
  }
}

TEST(Series, CsvColumns) {
  const auto s = deviation_series(ErwParams(q(1, 2), q(0)), 2, {2, 10});
  std::ostringstream out;
  write_csv(out, s);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "n,order,value,normalization");
  EXPECT_NE(out.str().find(",critical"), std::string::npos);
}

}  // namespace
}  // namespace erw
