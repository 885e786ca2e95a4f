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

#include "erw/moments.h"

#include <string>
#include <utility>

#include "erw/errors.h"
#include "erw/special.h"
#include "erw/summation.h"

namespace erw {
namespace {

constexpr int kReduceEvery = 32;

std::vector<std::vector<BigInt>> binomial_table(int max_order) {
  std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(max_order) + 1);
  for (int k = 0; k <= max_order; ++k) {
    table[k].resize(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
      table[k][j] = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    }
  }
  return table;
}

void require_order(int max_order) {
  if (max_order < 1) throw ContractViolation("moment order must be >= 1");
}

}  // namespace

MomentVector::MomentVector(ErwParams params, std::int64_t n, std::map<int, Rational> values)
    : params_(std::move(params)), n_(n), values_(std::move(values)) {
  if (n_ < 1) throw ContractViolation("MomentVector requires n >= 1");
}

MomentVector MomentVector::initial(const ErwParams& params, int max_order) {
  require_order(max_order);
  std::map<int, Rational> values;
  for (int k = 1; k <= max_order; ++k) {
    values.emplace(k, k % 2 == 1 ? params.beta() : Rational(1));
  }
  return MomentVector(params, 1, std::move(values));
}

const Rational& MomentVector::at(int k) const {
  auto it = values_.find(k);
  if (it == values_.end()) {
    throw ContractViolation("moment of order " + std::to_string(k) + " not present");
  }
  return it->second;
}

MomentVector step_moments(const MomentVector& mv) {
  const int max_order = mv.max_order();
  if (max_order < 2 || max_order % 2 != 0) {
    throw ContractViolation("step_moments requires an even number of orders");
  }
  for (int k = 1; k <= max_order; ++k) {
    if (!mv.values().contains(k)) {
      throw ContractViolation("step_moments: order " + std::to_string(k) +
                              " missing; the recursion couples to all lower orders");
    }
  }
  ExactMomentRecursion engine(mv);
  engine.step();
  return engine.snapshot();
}

ExactMomentRecursion::ExactMomentRecursion(const ErwParams& params, int max_order,
                                           const MomentOptions& options)
    : ExactMomentRecursion(MomentVector::initial(params, max_order), options) {}

ExactMomentRecursion::ExactMomentRecursion(const MomentVector& start,
                                           const MomentOptions& options)
    : params_(start.params()),
      options_(options),
      max_order_(start.max_order()),
      n_(start.n()),
      binom_(binomial_table(start.max_order())) {
  require_order(max_order_);
  // Common denominator of all orders.
  denominator_ = 1;
  for (int k = 1; k <= max_order_; ++k) {
    const Rational& v = start.at(k);
    mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), v.get_den().get_mpz_t());
  }
  numerators_.resize(static_cast<std::size_t>(max_order_) + 1);
  numerators_[0] = denominator_;
  for (int k = 1; k <= max_order_; ++k) {
    const Rational& v = start.at(k);
    numerators_[k] = v.get_num() * (denominator_ / v.get_den());
  }
}

void ExactMomentRecursion::step() {
  // With alpha = a/b, multiply through by b*n so every coefficient
  // b n C(k, j) + a C(k, j-1) is an integer.
  const BigInt& a = params_.alpha().get_num();
  const BigInt bn = params_.alpha().get_den() * BigInt(static_cast<long>(n_));
  std::vector<BigInt> next(numerators_.size());
  BigInt coeff;
  for (int k = max_order_; k >= 1; --k) {
    BigInt acc = 0;
    for (int j = k % 2; j <= k; j += 2) {
      coeff = bn * binom_[k][j];
      if (j >= 1) coeff += a * binom_[k][j - 1];
      acc += coeff * numerators_[j];
    }
    next[k] = std::move(acc);
  }
  denominator_ *= bn;
  next[0] = denominator_;
  numerators_ = std::move(next);
  ++n_;
  if (n_ % kReduceEvery == 0) reduce();
  check_size();
}

void ExactMomentRecursion::advance_to(std::int64_t n) {
  if (n < n_) throw ContractViolation("advance_to cannot move backwards in time");
  while (n_ < n) step();
}

void ExactMomentRecursion::reduce() {
  BigInt g = denominator_;
  for (int k = 1; k <= max_order_ && g != 1; ++k) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), numerators_[k].get_mpz_t());
  }
  if (g == 1) return;
  for (auto& v : numerators_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  denominator_ = numerators_[0];
}

void ExactMomentRecursion::check_size() const {
  const std::size_t bits = denominator_bits();
  if (bits > options_.max_bits) {
    throw ResourceLimitError("exact moment state reached " + std::to_string(bits) +
                             " bits at n=" + std::to_string(n_) + " (cap " +
                             std::to_string(options_.max_bits) + ")");
  }
}

std::size_t ExactMomentRecursion::denominator_bits() const {
  return mpz_sizeinbase(denominator_.get_mpz_t(), 2);
}

Rational ExactMomentRecursion::moment(int k) const {
  if (k < 1 || k > max_order_) {
    throw ContractViolation("moment order " + std::to_string(k) + " outside 1.." +
                            std::to_string(max_order_));
  }
  Rational q(numerators_[k], denominator_);
  q.canonicalize();
  return q;
}

MomentVector ExactMomentRecursion::snapshot() const {
  std::map<int, Rational> values;
  for (int k = 1; k <= max_order_; ++k) values.emplace(k, moment(k));
  return MomentVector(params_, n_, std::move(values));
}

MomentVector exact_moments(const ErwParams& params, std::int64_t n, int max_order,
                           const MomentOptions& options) {
  if (n < 1) throw ContractViolation("exact moments require n >= 1");
  if (max_order < 1 || max_order > options.max_order) {
    throw ContractViolation("moment order " + std::to_string(max_order) + " outside 1.." +
                            std::to_string(options.max_order));
  }
  ExactMomentRecursion engine(params, max_order, options);
  engine.advance_to(n);
  return engine.snapshot();
}

Rational exact_moment(const ErwParams& params, std::int64_t n, int k,
                      const MomentOptions& options) {
  return exact_moments(params, n, k, options).at(k);
}

FloatMomentRecursion::FloatMomentRecursion(const ErwParams& params, int max_order)
    : alpha_(params.alpha_ld()), max_order_(max_order) {
  require_order(max_order);
  moments_.assign(static_cast<std::size_t>(max_order) + 1, 1.0L);
  for (int k = 1; k <= max_order; k += 2) moments_[k] = params.beta_ld();
  scratch_.resize(moments_.size());
  binom_.resize(moments_.size());
  for (int k = 0; k <= max_order; ++k) {
    binom_[k].resize(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
      binom_[k][j] = static_cast<long double>(
          binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)).get_d());
    }
  }
}

void FloatMomentRecursion::step() {
  const long double r = alpha_ / static_cast<long double>(n_);
  for (int k = max_order_; k >= 1; --k) {
    long double acc = 0.0L;
    for (int j = k % 2; j <= k; j += 2) {
      long double c = binom_[k][j];
      if (j >= 1) c += r * binom_[k][j - 1];
      acc += c * moments_[j];
    }
    scratch_[k] = acc;
  }
  for (int k = 1; k <= max_order_; ++k) moments_[k] = scratch_[k];
  ++n_;
}

void FloatMomentRecursion::advance_to(std::int64_t n) {
  if (n < n_) throw ContractViolation("advance_to cannot move backwards in time");
  while (n_ < n) step();
}

Rational first_moment(const ErwParams& params, std::int64_t n) {
  Rational r = params.beta() * mean_scale_exact(params, n);
  r.canonicalize();
  return r;
}

long double second_moment_closed_form(const ErwParams& params, std::int64_t n) {
  if (n < 1) throw ContractViolation("second_moment_closed_form requires n >= 1");
  const long double nn = static_cast<long double>(n);
  if (params.alpha() == Rational(1, 2)) {
    CompensatedSum<long double> harmonic;
    for (std::int64_t l = 1; l <= n; ++l) harmonic += 1.0L / static_cast<long double>(l);
    return nn * harmonic.value();
  }
  const long double a = params.alpha_ld();
  // Gamma(n+2a) / (Gamma(n) Gamma(2a)) = n * Gamma(n+2a) / (Gamma(2a) Gamma(n+1)).
  const long double ratio = nn * pochhammer_ratio(2.0L * a, n);
  return nn / (1.0L - 2.0L * a) + ratio / (2.0L * a - 1.0L);
}

Rational second_moment_closed_form_exact(const ErwParams& params, std::int64_t n) {
  if (n < 1) throw ContractViolation("second_moment_closed_form_exact requires n >= 1");
  const Rational& a = params.alpha();
  const Rational nn(static_cast<long>(n));
  Rational out;
  if (a == Rational(1, 2)) {
    Rational harmonic = 0;
    for (std::int64_t l = 1; l <= n; ++l) harmonic += Rational(1, static_cast<unsigned long>(l));
    out = nn * harmonic;
  } else {
    // 2a (2a+1) ... (2a+n-1) / (n-1)!
    Rational ratio = 1;
    for (std::int64_t i = 0; i < n; ++i) {
      ratio *= 2 * a + static_cast<long>(i);
      if (i >= 1) ratio /= static_cast<long>(i);
    }
    out = nn / (1 - 2 * a) + ratio / (2 * a - 1);
  }
  out.canonicalize();
  return out;
}

namespace {

void enumerate_paths(const Rational& alpha, int remaining, std::int64_t time, std::int64_t position,
                     const Rational& probability, std::map<std::int64_t, Rational>& law) {
  if (remaining == 0) {
    auto [it, inserted] = law.try_emplace(position, probability);
    if (!inserted) it->second += probability;
    return;
  }
  // P(X_{time+1} = +-1 | F_time) = (1 +- alpha * S_time / time) / 2
  Rational drift = alpha * Rational(static_cast<long>(position), static_cast<long>(time));
  drift.canonicalize();
  const Rational up = (1 + drift) / 2;
  const Rational down = (1 - drift) / 2;
  if (up != 0) enumerate_paths(alpha, remaining - 1, time + 1, position + 1, probability * up, law);
  if (down != 0) {
    enumerate_paths(alpha, remaining - 1, time + 1, position - 1, probability * down, law);
  }
}

}  // namespace

std::map<std::int64_t, Rational> brute_force_distribution(const ErwParams& params, int n) {
  if (n < 1) throw ContractViolation("brute_force_distribution requires n >= 1");
  if (n > kBruteForceMaxSteps) {
    throw ResourceLimitError("brute-force enumeration refused for n=" + std::to_string(n) +
                             " (limit " + std::to_string(kBruteForceMaxSteps) + ")");
  }
  std::map<std::int64_t, Rational> law;
  const Rational q = params.q();
  if (q != 0) enumerate_paths(params.alpha(), n - 1, 1, 1, q, law);
  if (q != 1) enumerate_paths(params.alpha(), n - 1, 1, -1, 1 - q, law);
  for (auto& [s, p] : law) p.canonicalize();
  return law;
}

Rational brute_force_moment(const ErwParams& params, int n, int k) {
  if (k < 1) throw ContractViolation("brute_force_moment requires k >= 1");
  Rational acc = 0;
  for (const auto& [s, p] : brute_force_distribution(params, n)) {
    BigInt power;
    BigInt base(static_cast<long>(s));
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
    acc += p * Rational(power);
  }
  acc.canonicalize();
  return acc;
}

}  // namespace erw
