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

#ifndef ERW_PARAMS_H_
#define ERW_PARAMS_H_

#include <string>
#include <string_view>

#include "erw/rational.h"

namespace erw {

enum class Regime { kDiffusive, kCritical, kSuperdiffusive };

std::string_view regime_name(Regime regime);

// Elephant random walk parameters. alpha = 2p - 1 is the memory parameter and
// beta = 2q - 1 the mean of the first step. Both are exact rationals so the
// knife-edge cases (alpha in {0, -1/2, 1/2}, beta = 0) are decided by exact
// comparison.
class ErwParams {
 public:
  // Throws DomainError unless -1 < alpha < 1 and -1 <= beta <= 1.
  ErwParams(Rational alpha, Rational beta);

  static ErwParams from_probabilities(const Rational& p, const Rational& q);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  Rational p() const { return (1 + alpha_) / 2; }
  Rational q() const { return (1 + beta_) / 2; }

  long double alpha_ld() const { return alpha_ld_; }
  long double beta_ld() const { return beta_ld_; }

  Regime regime() const;

  std::string describe() const;

 private:
  Rational alpha_;
  Rational beta_;
  long double alpha_ld_;
  long double beta_ld_;
};

Regime regime_of(const Rational& alpha);

}  // namespace erw

#endif  // ERW_PARAMS_H_
