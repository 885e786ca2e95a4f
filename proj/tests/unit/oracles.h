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

// Reference values computed independently of the library: 50-digit gamma
// functions from Boost, and the exact law of S_n propagated state by state
// from the conditional step probabilities.

#ifndef ERW_TESTS_ORACLES_H_
#define ERW_TESTS_ORACLES_H_

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <gmpxx.h>
#include <map>

namespace erw::oracle {

using HP = boost::multiprecision::cpp_bin_float_50;

inline HP hp(long num, long den = 1) { return HP(num) / HP(den); }

inline long double tgamma_hp(const HP& x) { return static_cast<long double>(boost::math::tgamma(x)); }

// Gamma(n + a) / Gamma(n + b) at 50 digits, via lgamma to survive large n.
inline long double gamma_ratio_hp(const HP& a, const HP& b, std::int64_t n) {
  const HP nn(n);
  return static_cast<long double>(exp(boost::math::lgamma(nn + a) - boost::math::lgamma(nn + b)));
}

// Law of S_n: map s -> P(S_n = s), exact. Independent of the library's path
// enumerator: it pushes mass forward one step at a time.
inline std::map<long, mpq_class> law(const mpq_class& alpha, const mpq_class& beta, int n) {
  std::map<long, mpq_class> cur;
  const mpq_class q = (1 + beta) / 2;
  cur[1] = q;
  cur[-1] = 1 - q;
  for (int t = 1; t < n; ++t) {
    std::map<long, mpq_class> next;
    for (const auto& [s, pr] : cur) {
      if (pr == 0) continue;
      mpq_class frac(s, static_cast<unsigned long>(t));
      frac.canonicalize();
      const mpq_class up = (1 + alpha * frac) / 2;
      next[s + 1] += pr * up;
      next[s - 1] += pr * (1 - up);
    }
    cur = std::move(next);
  }
  return cur;
}

inline mpq_class law_moment(const std::map<long, mpq_class>& p, int k) {
  mpq_class total = 0;
  for (const auto& [s, pr] : p) {
    mpz_class sk;
    mpz_pow_ui(sk.get_mpz_t(), mpz_class(s).get_mpz_t(), static_cast<unsigned long>(k));
    total += pr * sk;
  }
  return total;
}

}  // namespace erw::oracle

#endif  // ERW_TESTS_ORACLES_H_
