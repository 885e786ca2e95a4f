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

// Text formatting shared by every writer: 17 significant digits for floats,
// "num/den" for rationals.

#ifndef ERW_IO_H_
#define ERW_IO_H_

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace erw {

inline constexpr int kSignificantDigits = 17;

// "%.17g"; NaN and infinities print as nan, inf, -inf.
std::string format_number(double x);
std::string format_number(long double x);

// Joins cells with commas and terminates the line.
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);
void write_csv_row(std::ostream& out, std::initializer_list<std::string_view> cells);

// Raw little-endian IEEE-754 float64 values, no header.
void write_float64_le(std::ostream& out, const std::vector<double>& values);
std::vector<double> read_float64_le(std::istream& in);

}  // namespace erw

#endif  // ERW_IO_H_
