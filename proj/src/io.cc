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

#include "erw/io.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace erw {

namespace {

std::string special_value(long double x) {
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) return special_value(x);
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", kSignificantDigits, x);
  return buf;
}

std::string format_number(long double x) {
  if (!std::isfinite(x)) return special_value(x);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*Lg", kSignificantDigits, x);
  return buf;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

void write_csv_row(std::ostream& out, std::initializer_list<std::string_view> cells) {
  bool first = true;
  for (std::string_view c : cells) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

void write_float64_le(std::ostream& out, const std::vector<double>& values) {
  for (double v : values) {
    unsigned char bytes[8];
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
    out.write(reinterpret_cast<const char*>(bytes), 8);
  }
}

std::vector<double> read_float64_le(std::istream& in) {
  std::vector<double> out;
  unsigned char bytes[8];
  while (in.read(reinterpret_cast<char*>(bytes), 8)) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    out.push_back(std::bit_cast<double>(bits));
  }
  return out;
}

}  // namespace erw
