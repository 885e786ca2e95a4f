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

// Exact rationals (GMP) and the conversions the rest of the library needs.

#ifndef ERW_RATIONAL_H_
#define ERW_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace erw {

using Rational = mpq_class;
using BigInt = mpz_class;

struct ParsedRational {
  Rational value;
  // True when the literal was a decimal whose value has no finite binary
  // expansion (0.1, 0.3, ...). The value is still the exact decimal.
  bool inexact_in_binary = false;
};

// Accepts "p/q", integers, and decimals with an optional exponent
// ("-1/2", "3", "0.25", "2.5e-1"). Throws DomainError on malformed input.
ParsedRational parse_rational(std::string_view text);

// Canonical "num/den" form; integers render without "/1".
std::string to_string(const Rational& q);

// Correctly rounded to the 64-bit long double mantissa (within one ulp).
long double to_long_double(const Rational& q);

// Total bit length of numerator and denominator.
std::size_t bit_size(const Rational& q);

// Rational value of an integer.
inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

}  // namespace erw

#endif  // ERW_RATIONAL_H_
