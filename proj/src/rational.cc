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

#include "erw/rational.h"

#include <cctype>
#include <cmath>
#include <string>

#include "erw/errors.h"

namespace erw {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void malformed(std::string_view text) {
  throw DomainError("malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

ParsedRational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) malformed(text);

  ParsedRational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    out.value = Rational(n, d);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) malformed(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      std::string_view ip = mantissa.substr(0, dot);
      std::string_view fp = mantissa.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
          (!fp.empty() && !all_digits(fp))) {
        malformed(text);
      }
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!all_digits(mantissa)) malformed(text);
      digits = std::string(mantissa);
    }
    BigInt n(digits, 10);
    long scale = exponent - frac_len;
    if (scale >= 0) {
      out.value = Rational(n * pow10(static_cast<unsigned long>(scale)));
    } else {
      out.value = Rational(n, pow10(static_cast<unsigned long>(-scale)));
    }
    out.value.canonicalize();
    // A decimal is exact in binary iff its reduced denominator is a power of 2.
    BigInt den = out.value.get_den();
    out.inexact_in_binary = mpz_popcount(den.get_mpz_t()) != 1;
  }
  out.value.canonicalize();
  if (negative) out.value = -out.value;
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long double to_long_double(const Rational& q) {
  if (q == 0) return 0.0L;
  // Shift so the integer quotient carries ~80 significant bits, then scale back.
  const bool negative = q < 0;
  const BigInt num = abs(q.get_num());
  const BigInt& den = q.get_den();
  long shift = 80 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  BigInt scaled;
  if (shift >= 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_fdiv_q_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  BigInt quotient;
  mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  // Split the ~80-bit quotient into two exactly representable halves.
  BigInt high;
  mpz_tdiv_q_2exp(high.get_mpz_t(), quotient.get_mpz_t(), 40);
  BigInt low = quotient - (high << 40);
  long double hi = static_cast<long double>(high.get_d());
  long double lo = static_cast<long double>(low.get_d());
  long double mantissa = std::ldexp(hi, 40) + lo;
  long double value = std::ldexp(mantissa, static_cast<int>(-shift));
  return negative ? -value : value;
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

}  // namespace erw
