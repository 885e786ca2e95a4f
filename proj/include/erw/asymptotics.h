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

// Closed-form leading-order predictions for the moment deviations, the
// variance, and the Berry-Esseen bound shapes. Nothing here is used by the
// engines; these are the values the engines are compared against.

#ifndef ERW_ASYMPTOTICS_H_
#define ERW_ASYMPTOTICS_H_

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "erw/params.h"
#include "erw/rational.h"

namespace erw {

enum class DecayKind { kPowerOfN, kPowerOfLogN };

std::string_view decay_kind_name(DecayKind kind);

// deviation_k(n) ~ coefficient * n^-exponent      (kPowerOfN)
//                ~ coefficient * (log n)^-exponent (kPowerOfLogN)
struct RatePrediction {
  Rational alpha;
  int order = 0;
  Regime regime = Regime::kDiffusive;
  long double coefficient = 0;
  DecayKind decay = DecayKind::kPowerOfN;
  long double exponent = 0;
  // The deviation is exactly zero (order 2 at alpha = 0 or -1/2, or any odd
  // order when beta = 0); coefficient and exponent are then not meaningful.
  bool identically_zero = false;

  long double evaluate(long double n) const;
};

// Leading term for the deviation of order k. Throws DomainError for
// alpha > 1/2 and ContractViolation for k < 1.
RatePrediction predict_rate(const ErwParams& params, int k);

// CSV header "alpha,order,gamma_exponent,coefficient,decay_kind".
void write_predictions_csv(std::ostream& out, const std::vector<RatePrediction>& rows,
                           bool header = true);

// n/(1-2a), n log n, or n^(2a)/((2a-1) Gamma(2a)).
long double variance_asymptote(const ErwParams& params, long double n);
// Same branches for any alpha in [-1, 1]; the simulator allows the endpoints.
long double variance_scale(const Rational& alpha, long double n);

// Kolmogorov-distance bound with its constant dropped. Throws DomainError for
// alpha > 1/2 and for n where log log n is undefined at alpha = 1/2.
long double berry_esseen_shape(const ErwParams& params, long double n);

// s_n^2 = sum_{i<=n} Gamma(i)^2 / Gamma(i+a)^2 by direct summation, and
// sigma_n^2 = Gamma(n)^2/Gamma(n+a)^2 times n/(1-2a) or n log n. The ratio
// sqrt(s^2/sigma^2) - 1 decays like 1/n (a < 0), n^(2a-1) (0 < a < 1/2) or
// 1/log n (a = 1/2).
struct VarianceSums {
  long double s2 = 0;
  long double sigma2 = 0;
};
VarianceSums variance_sums(const ErwParams& params, std::int64_t n);

// Gamma(x + a) / (x^a Gamma(x)); lies in [(x/(x+a))^(1-a), 1] for a in (0, 1).
long double wendel_ratio(long double x, long double a);

// (m / (log n)^m) sum_{j=1}^n (log j)^(m-1) / j = 1 + O((log n)^-m).
long double log_power_sum(int m, std::int64_t n);

// Limits of n^2 h_n^(2m) and n H_n^(2m) for the subcritical system:
//   -(m(m-1)/3)(2a^2+1)   and   (1-4a) c_2m / (m(1-2a) - 1),
// with c_2m = m(m-1)/2 c(a). The second needs m(1-2a) > 1.
long double inhomogeneity_limit(const Rational& alpha, int m);
long double forced_inhomogeneity_limit(const Rational& alpha, int m);

}  // namespace erw

#endif  // ERW_ASYMPTOTICS_H_
