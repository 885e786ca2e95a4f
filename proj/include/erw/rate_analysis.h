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

// Empirical decay exponents of deviation series by log-log least squares, and
// the (alpha, order) exponent scan.

#ifndef ERW_RATE_ANALYSIS_H_
#define ERW_RATE_ANALYSIS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "erw/asymptotics.h"
#include "erw/deviations.h"
#include "erw/rational.h"

namespace erw {

inline constexpr std::size_t kMinFitPoints = 10;

struct FitWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// [n_max / 100, n_max].
FitWindow default_window(std::int64_t n_max);

// value ~ coefficient * x^-exponent with x = n (power fits) or x = log n (log
// fits); coefficient carries the sign of the data.
struct FitResult {
  long double exponent = 0;
  long double coefficient = 0;
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  long double residual_rms = 0;
  std::size_t points = 0;
};

// Unweighted least squares of log|value| on log n over grid points inside the
// window. Throws DomainError if a value in the window is zero, the sign
// changes, or fewer than kMinFitPoints points fall in the window.
FitResult fit_power_exponent(const std::vector<std::int64_t>& n, const std::vector<long double>& values,
                             FitWindow window);
FitResult fit_power_exponent(const DeviationSeries& series, FitWindow window);

// Same with log log n as the regressor. The series overload requires the
// critical normalisation.
FitResult fit_log_rate(const std::vector<std::int64_t>& n, const std::vector<long double>& values,
                       FitWindow window);
FitResult fit_log_rate(const DeviationSeries& series, FitWindow window);

// -9/10, -3/4, -1/2, -1/4, -1/10, 0, 1/10, 1/4, 2/5.
std::vector<Rational> default_alpha_grid();

struct CrossoverOptions {
  std::vector<Rational> alphas = default_alpha_grid();
  std::vector<int> orders = {1, 2, 3, 4, 5, 6};
  Rational beta = 1;
  std::int64_t n_max = 1000000;
  std::optional<FitWindow> window;  // default_window(n_max) when unset
  int threads = 1;
};

struct CrossoverCell {
  Rational alpha;
  int order = 0;
  RatePrediction prediction;
  std::optional<FitResult> fit;
  // "ok", "zero" (identically zero, not fitted), "log_rate" (alpha = 1/2,
  // exponent of log n), or "fit refused: <reason>".
  std::string flags;
};

// One cell per (alpha, order), alpha-major in input order. Alphas outside
// (-1, 1/2] and orders outside 1..12 throw DomainError.
std::vector<CrossoverCell> crossover_scan(const CrossoverOptions& options);

// CSV header
// "alpha,order,gamma_hat,gamma_predicted,coefficient_hat,coefficient_predicted,flags".
void write_crossover_csv(std::ostream& out, const std::vector<CrossoverCell>& cells);

}  // namespace erw

#endif  // ERW_RATE_ANALYSIS_H_
