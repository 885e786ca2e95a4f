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

#include "erw/params.h"

#include <utility>

#include "erw/errors.h"

namespace erw {

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::kDiffusive:
      return "diffusive";
    case Regime::kCritical:
      return "critical";
    case Regime::kSuperdiffusive:
      return "superdiffusive";
  }
  return "unknown";
}

Regime regime_of(const Rational& alpha) {
  const Rational half(1, 2);
  if (alpha < half) return Regime::kDiffusive;
  if (alpha == half) return Regime::kCritical;
  return Regime::kSuperdiffusive;
}

ErwParams::ErwParams(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  alpha_.canonicalize();
  beta_.canonicalize();
  if (!(alpha_ > -1 && alpha_ < 1)) {
    throw DomainError("alpha must lie in (-1,1), got " + to_string(alpha_));
  }
  if (!(beta_ >= -1 && beta_ <= 1)) {
    throw DomainError("beta must lie in [-1,1], got " + to_string(beta_));
  }
  alpha_ld_ = to_long_double(alpha_);
  beta_ld_ = to_long_double(beta_);
}

ErwParams ErwParams::from_probabilities(const Rational& p, const Rational& q) {
  if (!(p > 0 && p < 1)) {
    throw DomainError("p must lie in (0,1), got " + to_string(p));
  }
  if (!(q >= 0 && q <= 1)) {
    throw DomainError("q must lie in [0,1], got " + to_string(q));
  }
  return ErwParams(2 * p - 1, 2 * q - 1);
}

Regime ErwParams::regime() const { return regime_of(alpha_); }

std::string ErwParams::describe() const {
  return "alpha=" + to_string(alpha_) + " beta=" + to_string(beta_);
}

}  // namespace erw
