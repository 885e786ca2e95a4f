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

#include "erw/special.h"

#include <math.h>

#include <cmath>
#include <limits>
#include <string>

#include "erw/errors.h"

namespace erw {

bool is_nonpositive_integer(long double s) {
  return s <= 0 && std::floor(s) == s;
}

bool is_nonpositive_integer(const Rational& s) {
  return s <= 0 && s.get_den() == 1;
}

long double reciprocal_gamma(long double s) {
  if (is_nonpositive_integer(s)) return 0.0L;
  if (s > 1750.0L) return 0.0L;  // below the smallest normal long double
  if (s > -1700.0L) return 1.0L / std::tgamma(s);
  // Reflection: 1/Gamma(s) = Gamma(1 - s) sin(pi s) / pi.
  int sign = 1;
  long double log_g = log_abs_gamma(1.0L - s, &sign);
  return std::exp(log_g) * std::sin(kPi * s) / kPi;
}

long double log_abs_gamma(long double x, int* sign) {
  int s = 1;
  long double v = ::lgammal_r(x, &s);
  if (sign != nullptr) *sign = s;
  return v;
}

Rational mean_scale_exact(const Rational& alpha, std::int64_t n) {
  if (n < 1) throw ContractViolation("mean_scale_exact requires n >= 1");
  // prod (j + alpha)/j with alpha = a/b: numerator prod (b j + a), denominator b^(n-1) (n-1)!.
  const BigInt& a = alpha.get_num();
  const BigInt& b = alpha.get_den();
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t j = 1; j < n; ++j) {
    num *= b * BigInt(static_cast<long>(j)) + a;
    den *= b * BigInt(static_cast<long>(j));
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

long double mean_scale(long double alpha, std::int64_t n) {
  if (n < 1) throw ContractViolation("mean_scale requires n >= 1");
  if (n == 1) return 1.0L;
  const long double nn = static_cast<long double>(n);
  return std::exp(log_abs_gamma(nn + alpha, nullptr) - log_abs_gamma(nn, nullptr) -
                  log_abs_gamma(1.0L + alpha, nullptr));
}

long double gamma_ratio(long double a, long double b, std::int64_t n) {
  const long double x = static_cast<long double>(n) + a;
  const long double y = static_cast<long double>(n) + b;
  if (is_nonpositive_integer(x) || is_nonpositive_integer(y)) {
    throw DomainError("gamma_ratio: argument at a gamma pole");
  }
  if (a == b) return 1.0L;
  int sx = 1;
  int sy = 1;
  const long double lx = log_abs_gamma(x, &sx);
  const long double ly = log_abs_gamma(y, &sy);
  return static_cast<long double>(sx * sy) * std::exp(lx - ly);
}

long double pochhammer_ratio(long double x, std::int64_t n) {
  if (n < 0) throw ContractViolation("pochhammer_ratio requires n >= 0");
  if (is_nonpositive_integer(x) && static_cast<long double>(n) > -x) return 0.0L;
  constexpr std::int64_t kDirectLimit = 4096;
  if (n <= kDirectLimit || is_nonpositive_integer(x)) {
    long double r = 1.0L;
    for (std::int64_t i = 0; i < n; ++i) {
      r *= (x + static_cast<long double>(i)) / static_cast<long double>(i + 1);
    }
    return r;
  }
  // Continue the direct product to kDirectLimit, then bridge with log-gamma:
  // prod_{i=L}^{n-1} (x+i)/(i+1) = Gamma(n+x) Gamma(L+1) / (Gamma(L+x) Gamma(n+1)).
  long double head = 1.0L;
  for (std::int64_t i = 0; i < kDirectLimit; ++i) {
    head *= (x + static_cast<long double>(i)) / static_cast<long double>(i + 1);
  }
  const long double nn = static_cast<long double>(n);
  const long double ll = static_cast<long double>(kDirectLimit);
  const long double log_tail = log_abs_gamma(nn + x, nullptr) - log_abs_gamma(nn + 1.0L, nullptr) -
                               log_abs_gamma(ll + x, nullptr) + log_abs_gamma(ll + 1.0L, nullptr);
  return head * std::exp(log_tail);
}

ProductAsymptote product_asymptote(const Rational& delta) {
  ProductAsymptote out;
  if (delta < 0 && delta.get_den() == 1) {
    const long k = -delta.get_num().get_si();
    out.offset = k;
    long double factorial = 1.0L;
    for (long i = 2; i <= k; ++i) factorial *= static_cast<long double>(i);
    out.constant = factorial;
    return out;
  }
  out.offset = 0;
  out.constant = reciprocal_gamma(1.0L + to_long_double(delta));
  return out;
}

std::uint64_t normal_moment(int k) {
  if (k < 1) throw ContractViolation("normal_moment requires k >= 1");
  if (k % 2 == 1) return 0;
  if (k > 40) throw ResourceLimitError("normal_moment: (k-1)!! overflows 64 bits");
  std::uint64_t r = 1;
  for (int j = 1; j < k; j += 2) r *= static_cast<std::uint64_t>(j);
  return r;
}

BigInt double_factorial_odd(int m) {
  BigInt r = 1;
  for (int j = 1; j <= m; ++j) r *= 2 * j - 1;
  return r;
}

Rational even_rate_constant(const Rational& alpha) {
  if (alpha > 0) {
    throw DomainError("even_rate_constant applies only for -1 < alpha <= 0, got " +
                      to_string(alpha));
  }
  Rational c = -2 * (2 * alpha * alpha + 1) / (3 * (1 - 4 * alpha));
  c.canonicalize();
  return c;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace erw
