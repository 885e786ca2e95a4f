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

#include "erw/asymptotics.h"

#include <cmath>
#include <ostream>
#include <string>

#include "erw/errors.h"
#include "erw/io.h"
#include "erw/special.h"
#include "erw/summation.h"

namespace erw {

namespace {

void require_in_scope(const ErwParams& params, const char* what) {
  if (params.alpha() > Rational(1, 2)) {
    throw DomainError(std::string(what) + " covers alpha <= 1/2 only, got " +
                      to_string(params.alpha()));
  }
}

long double c_alpha(long double a) { return -2.0L * (2.0L * a * a + 1.0L) / (3.0L * (1.0L - 4.0L * a)); }

}  // namespace

std::string_view decay_kind_name(DecayKind kind) {
  return kind == DecayKind::kPowerOfLogN ? "power_of_log_n" : "power_of_n";
}

long double RatePrediction::evaluate(long double n) const {
  if (identically_zero) return 0.0L;
  const long double base = decay == DecayKind::kPowerOfLogN ? std::log(n) : n;
  return coefficient * std::pow(base, -exponent);
}

RatePrediction predict_rate(const ErwParams& params, int k) {
  if (k < 1) throw ContractViolation("predict_rate requires k >= 1");
  require_in_scope(params, "predict_rate");
  const Rational& alpha = params.alpha();
  const long double a = params.alpha_ld();
  const bool critical = alpha == Rational(1, 2);
  const int m = (k + 1) / 2;

  RatePrediction p;
  p.alpha = alpha;
  p.order = k;
  p.regime = params.regime();
  const long double dfm = static_cast<long double>(double_factorial_odd(m).get_d());

  if (k % 2 == 1) {
    if (critical) {
      p.coefficient = 2.0L * params.beta_ld() / std::sqrt(kPi) * dfm;
      p.decay = DecayKind::kPowerOfLogN;
      p.exponent = 0.5L;
    } else {
      p.coefficient = params.beta_ld() * std::sqrt(1.0L - 2.0L * a) * reciprocal_gamma(1.0L + a) * dfm;
      p.exponent = (1.0L - 2.0L * a) / 2.0L;
    }
    p.identically_zero = params.beta() == 0;
    return p;
  }

  if (critical) {
    p.coefficient = static_cast<long double>(m) * kEulerGamma;
    p.decay = DecayKind::kPowerOfLogN;
    p.exponent = 1.0L;
    return p;
  }
  if (m == 1) {
    // -1/Gamma(2a) n^-(1-2a) on both sides of 0; 1/Gamma vanishes at a = 0, -1/2.
    p.coefficient = 0.0L - reciprocal_gamma(2.0L * a);
    p.exponent = 1.0L - 2.0L * a;
    p.identically_zero = alpha == 0 || alpha == Rational(-1, 2);
    return p;
  }
  if (alpha <= 0) {
    p.coefficient = static_cast<long double>(m * (m - 1)) / 2.0L * to_long_double(even_rate_constant(alpha));
    p.exponent = 1.0L;
  } else {
    p.coefficient = -static_cast<long double>(m) * reciprocal_gamma(2.0L * a);
    p.exponent = 1.0L - 2.0L * a;
  }
  return p;
}

void write_predictions_csv(std::ostream& out, const std::vector<RatePrediction>& rows, bool header) {
  if (header) write_csv_row(out, {"alpha", "order", "gamma_exponent", "coefficient", "decay_kind"});
  for (const auto& r : rows) {
    write_csv_row(out, {to_string(r.alpha), std::to_string(r.order), format_number(r.exponent),
                        r.identically_zero ? "0" : format_number(r.coefficient),
                        r.identically_zero ? "identically_zero" : decay_kind_name(r.decay)});
  }
}

long double variance_asymptote(const ErwParams& params, long double n) {
  return variance_scale(params.alpha(), n);
}

long double variance_scale(const Rational& alpha, long double n) {
  const long double a = to_long_double(alpha);
  if (alpha < Rational(1, 2)) return n / (1.0L - 2.0L * a);
  if (alpha == Rational(1, 2)) return n * std::log(n);
  return std::pow(n, 2.0L * a) / ((2.0L * a - 1.0L) * std::tgamma(2.0L * a));
}

long double berry_esseen_shape(const ErwParams& params, long double n) {
  require_in_scope(params, "berry_esseen_shape");
  const long double a = params.alpha_ld();
  if (params.regime() == Regime::kCritical) {
    if (n <= std::exp(1.0L)) throw DomainError("berry_esseen_shape at alpha = 1/2 needs n > e");
    const long double l = std::log(n);
    return std::log(l) / std::sqrt(l);
  }
  if (n <= 1) throw DomainError("berry_esseen_shape needs n > 1");
  if (a <= 0) return std::log(n) / std::sqrt(n);
  return std::log(n) / std::pow(n, (1.0L - 2.0L * a) / 2.0L);
}

VarianceSums variance_sums(const ErwParams& params, std::int64_t n) {
  require_in_scope(params, "variance_sums");
  if (n < 2) throw ContractViolation("variance_sums requires n >= 2");
  const long double a = params.alpha_ld();
  auto term = [a](long double i) {
    return std::exp(2.0L * (log_abs_gamma(i, nullptr) - log_abs_gamma(i + a, nullptr)));
  };
  CompensatedSum<long double> s2;
  for (std::int64_t i = 1; i <= n; ++i) s2 += term(static_cast<long double>(i));
  const long double nn = static_cast<long double>(n);
  VarianceSums out;
  out.s2 = s2.value();
  out.sigma2 = term(nn) * (params.regime() == Regime::kCritical ? nn * std::log(nn)
                                                                : nn / (1.0L - 2.0L * a));
  return out;
}

long double wendel_ratio(long double x, long double a) {
  if (x <= 0 || x + a <= 0) throw DomainError("wendel_ratio needs x > 0 and x + a > 0");
  return std::exp(log_abs_gamma(x + a, nullptr) - log_abs_gamma(x, nullptr) - a * std::log(x));
}

long double log_power_sum(int m, std::int64_t n) {
  if (m < 1 || n < 2) throw ContractViolation("log_power_sum requires m >= 1 and n >= 2");
  CompensatedSum<long double> s;
  for (std::int64_t j = 1; j <= n; ++j) {
    const long double jj = static_cast<long double>(j);
    s += std::pow(std::log(jj), m - 1) / jj;
  }
  return static_cast<long double>(m) / std::pow(std::log(static_cast<long double>(n)), m) * s.value();
}

long double inhomogeneity_limit(const Rational& alpha, int m) {
  const long double a = to_long_double(alpha);
  return -static_cast<long double>(m * (m - 1)) / 3.0L * (2.0L * a * a + 1.0L);
}

long double forced_inhomogeneity_limit(const Rational& alpha, int m) {
  const long double a = to_long_double(alpha);
  const long double denom = static_cast<long double>(m) * (1.0L - 2.0L * a) - 1.0L;
  if (denom <= 0) throw DomainError("forced_inhomogeneity_limit needs m(1-2a) > 1");
  const long double c2m = static_cast<long double>(m * (m - 1)) / 2.0L * c_alpha(a);
  return (1.0L - 4.0L * a) * c2m / denom;
}

}  // namespace erw
