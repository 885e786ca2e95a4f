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

// Gamma-function utilities and the scalar constants of the moment theory.
//
// All Gamma ratios go through log-gamma so that arguments around 1e6 do not
// overflow. 1/Gamma(s) is taken to be exactly zero at s = 0, -1, -2, ...

#ifndef ERW_SPECIAL_H_
#define ERW_SPECIAL_H_

#include <cstdint>

#include "erw/params.h"
#include "erw/rational.h"

namespace erw {

inline constexpr long double kEulerGamma = 0.57721566490153286060651209008240243L;
inline constexpr long double kPi = 3.14159265358979323846264338327950288L;

// True when s is one of 0, -1, -2, ...
bool is_nonpositive_integer(long double s);
bool is_nonpositive_integer(const Rational& s);

long double reciprocal_gamma(long double s);

// log|Gamma(x)| and the sign of Gamma(x). Thread-safe (no global signgam).
long double log_abs_gamma(long double x, int* sign);

// a_n = prod_{j=1}^{n-1} (1 + alpha/j), so that E[S_n] = beta * a_n.
// Exact; intended for n up to ~1e4 (the numerator grows linearly in n).
Rational mean_scale_exact(const Rational& alpha, std::int64_t n);
inline Rational mean_scale_exact(const ErwParams& params, std::int64_t n) {
  return mean_scale_exact(params.alpha(), n);
}

// a_n = Gamma(n + alpha) / (Gamma(n) Gamma(1 + alpha)) through log-gamma.
long double mean_scale(long double alpha, std::int64_t n);
inline long double mean_scale(const ErwParams& params, std::int64_t n) {
  return mean_scale(params.alpha_ld(), n);
}

// Gamma(n + a) / Gamma(n + b); tends to n^(a - b). Throws DomainError when
// either argument is a gamma pole.
long double gamma_ratio(long double a, long double b, std::int64_t n);

// Gamma(n + x) / (Gamma(x) Gamma(n + 1)) = x (x+1) ... (x+n-1) / n!, finite at
// the poles of Gamma(x) (it is 0 once the product passes the zero factor).
long double pochhammer_ratio(long double x, std::int64_t n);

// For delta = -k (k a positive integer) the product prod_{j>j0}(1 + delta/j)
// starts past the vanishing factor j = k.
struct ProductAsymptote {
  std::int64_t offset = 0;   // j0(delta)
  long double constant = 1;  // A_delta, so the product ~ A_delta * n^delta
};
ProductAsymptote product_asymptote(const Rational& delta);

// Moments of N(0, 1): 0 for odd k, (k - 1)!! for even k.
std::uint64_t normal_moment(int k);

// (2m - 1)!! as an exact integer.
BigInt double_factorial_odd(int m);

// Coefficient of the 1/n decay of the normalised 2m-th moment deviation for
// -1 < alpha <= 0:  c(alpha) = -2 (2 alpha^2 + 1) / (3 (1 - 4 alpha)).
// Throws DomainError for alpha > 0.
Rational even_rate_constant(const Rational& alpha);

// Binomial coefficient as an exact integer.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace erw

#endif  // ERW_SPECIAL_H_
