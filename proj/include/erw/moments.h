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

// Moments E[(S_n)^k] of the elephant random walk.
//
// Conditioning on the first n steps gives E[X_{n+1} | F_n] = alpha S_n / n,
// and since X^2 = 1 the binomial expansion of (S_n + X_{n+1})^k closes on the
// moments of S_n of the same parity:
//
//   E[S_{n+1}^k] = sum_{j <= k, j = k mod 2} (C(k, j) + (alpha/n) C(k, j-1)) E[S_n^j]
//
// with E[S_n^0] = 1. Odd orders couple only to lower odd orders and even
// orders to lower even orders, so a trajectory carries all orders 1..K.

#ifndef ERW_MOMENTS_H_
#define ERW_MOMENTS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "erw/params.h"
#include "erw/rational.h"

namespace erw {

struct MomentOptions {
  int max_order = 12;
  // Cap on the bit length of the shared denominator of the exact state.
  std::size_t max_bits = std::size_t{1} << 20;
};

// Exact moments at a single time n; values()[k] = E[(S_n)^k].
class MomentVector {
 public:
  MomentVector(ErwParams params, std::int64_t n, std::map<int, Rational> values);

  // Moments of S_1 = X_1: beta for odd k, 1 for even k.
  static MomentVector initial(const ErwParams& params, int max_order);

  const ErwParams& params() const { return params_; }
  std::int64_t n() const { return n_; }
  const std::map<int, Rational>& values() const { return values_; }
  int max_order() const { return values_.empty() ? 0 : values_.rbegin()->first; }

  // Throws ContractViolation if the order is absent.
  const Rational& at(int k) const;

 private:
  ErwParams params_;
  std::int64_t n_;
  std::map<int, Rational> values_;
};

// One application of the moment recursion, n -> n + 1. Requires every order
// 1..K to be present with K even.
MomentVector step_moments(const MomentVector& mv);

// Exact trajectory engine. The state is kept as integer numerators over one
// shared denominator, so a step is a handful of small-integer multiplies and
// no gcd work; the representation is reduced periodically.
class ExactMomentRecursion {
 public:
  ExactMomentRecursion(const ErwParams& params, int max_order,
                       const MomentOptions& options = {});
  explicit ExactMomentRecursion(const MomentVector& start,
                                const MomentOptions& options = {});

  void step();
  // Steps until time n (n >= current time).
  void advance_to(std::int64_t n);

  std::int64_t n() const { return n_; }
  int max_order() const { return max_order_; }
  Rational moment(int k) const;
  MomentVector snapshot() const;
  std::size_t denominator_bits() const;

 private:
  void reduce();
  void check_size() const;

  ErwParams params_;
  MomentOptions options_;
  int max_order_;
  std::int64_t n_;
  BigInt denominator_;
  std::vector<BigInt> numerators_;  // index k holds the numerator of E[S^k]; [0] = denominator
  std::vector<std::vector<BigInt>> binom_;
};

// Exact E[(S_n)^k]. Throws ResourceLimitError if the rational state exceeds
// options.max_bits, ContractViolation for k outside [1, options.max_order].
Rational exact_moment(const ErwParams& params, std::int64_t n, int k,
                      const MomentOptions& options = {});

MomentVector exact_moments(const ErwParams& params, std::int64_t n, int max_order,
                           const MomentOptions& options = {});

// Same recursion in extended precision, for horizons beyond the exact path.
class FloatMomentRecursion {
 public:
  FloatMomentRecursion(const ErwParams& params, int max_order);

  void step();
  void advance_to(std::int64_t n);

  std::int64_t n() const { return n_; }
  long double moment(int k) const { return moments_.at(static_cast<std::size_t>(k)); }

 private:
  long double alpha_;
  int max_order_;
  std::int64_t n_ = 1;
  std::vector<long double> moments_;  // [0] = 1
  std::vector<std::vector<long double>> binom_;
  std::vector<long double> scratch_;
};

// E[S_n] = beta * a_n.
Rational first_moment(const ErwParams& params, std::int64_t n);

// E[S_n^2] = n/(1-2a) + Gamma(n+2a)/((2a-1) Gamma(n) Gamma(2a)) for a != 1/2 and
// n * H_n for a = 1/2, with 1/Gamma = 0 at the poles.
long double second_moment_closed_form(const ErwParams& params, std::int64_t n);

// The same closed form evaluated in rational arithmetic, where the Gamma
// ratio is the finite product 2a (2a+1) ... (2a+n-1) / (n-1)!.
Rational second_moment_closed_form_exact(const ErwParams& params, std::int64_t n);

inline constexpr int kBruteForceMaxSteps = 14;

// Exact law of S_n from enumerating all 2^n step sequences with their path
// probabilities. Throws ResourceLimitError for n > kBruteForceMaxSteps.
std::map<std::int64_t, Rational> brute_force_distribution(const ErwParams& params, int n);

Rational brute_force_moment(const ErwParams& params, int n, int k);

}  // namespace erw

#endif  // ERW_MOMENTS_H_
