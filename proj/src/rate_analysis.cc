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

#include "erw/rate_analysis.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <ostream>
#include <thread>

#include "erw/errors.h"
#include "erw/io.h"

namespace erw {

namespace {

FitResult least_squares(const std::vector<std::int64_t>& n, const std::vector<long double>& values,
                        FitWindow window, bool log_regressor) {
  if (n.size() != values.size()) throw ContractViolation("fit: grid and values differ in length");
  if (window.lo >= window.hi) throw ContractViolation("fit window needs lo < hi");
  std::vector<long double> xs;
  std::vector<long double> ys;
  int sign = 0;
  FitResult out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < window.lo || n[i] > window.hi) continue;
    const long double v = values[i];
    if (v == 0 || !std::isfinite(v)) {
      throw DomainError("fit refused: zero or non-finite value at n=" + std::to_string(n[i]));
    }
    const int s = v > 0 ? 1 : -1;
    if (sign != 0 && s != sign) throw DomainError("fit refused: sign change at n=" + std::to_string(n[i]));
    sign = s;
    const long double ln = std::log(static_cast<long double>(n[i]));
    if (log_regressor && ln <= 0) throw DomainError("fit refused: log n must be positive");
    xs.push_back(log_regressor ? std::log(ln) : ln);
    ys.push_back(std::log(std::abs(v)));
    if (out.points == 0) out.n_lo = n[i];
    out.n_hi = n[i];
    ++out.points;
  }
  if (out.points < kMinFitPoints) {
    throw DomainError("fit refused: " + std::to_string(out.points) + " grid points in window, need " +
                      std::to_string(kMinFitPoints));
  }
  const long double k = static_cast<long double>(out.points);
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  long double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const long double slope = sxy / sxx;
  const long double intercept = my - slope * mx;
  long double rss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const long double r = ys[i] - (intercept + slope * xs[i]);
    rss += r * r;
  }
  out.exponent = -slope;
  out.coefficient = static_cast<long double>(sign) * std::exp(intercept);
  out.residual_rms = std::sqrt(rss / k);
  return out;
}

}  // namespace

FitWindow default_window(std::int64_t n_max) { return {std::max<std::int64_t>(1, n_max / 100), n_max}; }

FitResult fit_power_exponent(const std::vector<std::int64_t>& n, const std::vector<long double>& values,
                             FitWindow window) {
  return least_squares(n, values, window, false);
}

FitResult fit_power_exponent(const DeviationSeries& series, FitWindow window) {
  return least_squares(series.grid, series.values, window, false);
}

FitResult fit_log_rate(const std::vector<std::int64_t>& n, const std::vector<long double>& values,
                       FitWindow window) {
  return least_squares(n, values, window, true);
}

FitResult fit_log_rate(const DeviationSeries& series, FitWindow window) {
  if (series.normalization != Normalization::kCritical) {
    throw ContractViolation("fit_log_rate expects a series with the critical normalisation");
  }
  return least_squares(series.grid, series.values, window, true);
}

std::vector<Rational> default_alpha_grid() {
  return {make_rational(-9, 10), make_rational(-3, 4), make_rational(-1, 2),
          make_rational(-1, 4),  make_rational(-1, 10), make_rational(0),
          make_rational(1, 10),  make_rational(1, 4),   make_rational(2, 5)};
}

std::vector<CrossoverCell> crossover_scan(const CrossoverOptions& options) {
  for (const auto& a : options.alphas) {
    if (a <= -1 || a > Rational(1, 2)) {
      throw DomainError("crossover_scan alpha must lie in (-1, 1/2], got " + to_string(a));
    }
  }
  for (int k : options.orders) {
    if (k < 1 || k > 12) throw DomainError("crossover_scan orders must lie in 1..12, got " + std::to_string(k));
  }
  if (options.n_max < 2) throw DomainError("crossover_scan needs n_max >= 2");
  const FitWindow window = options.window.value_or(default_window(options.n_max));
  int max_even_half = 0;
  for (int k : options.orders) {
    if (k % 2 == 0) max_even_half = std::max(max_even_half, k / 2);
  }

  const std::size_t per_alpha = options.orders.size();
  std::vector<CrossoverCell> cells(options.alphas.size() * per_alpha);

  auto run_alpha = [&](std::size_t ai) {
    const Rational& alpha = options.alphas[ai];
    const ErwParams params(alpha, options.beta);
    const bool critical = alpha == Rational(1, 2);
    const std::vector<std::int64_t> grid = geometric_grid(critical ? 2 : 1, options.n_max);
    // Even orders come from one coupled run.
    std::map<int, std::vector<long double>> even;
    if (max_even_half > 0) {
      if (critical) {
        auto trace = run_critical_deviations(params, max_even_half, grid);
        for (auto& o : trace.orders) even[o.order] = std::move(o.deviation);
      } else {
        auto trace = run_subcritical_deviations(params, max_even_half, grid);
        for (auto& o : trace.orders) even[o.order] = std::move(o.deviation);
      }
    }
    for (std::size_t oi = 0; oi < per_alpha; ++oi) {
      const int k = options.orders[oi];
      CrossoverCell& cell = cells[ai * per_alpha + oi];
      cell.alpha = alpha;
      cell.order = k;
      cell.prediction = predict_rate(params, k);
      if (cell.prediction.identically_zero) {
        cell.flags = "zero";
        continue;
      }
      const std::vector<long double> values =
          k % 2 == 0 ? even.at(k) : deviation_odd(params, k, grid).values;
      try {
        cell.fit = critical ? fit_log_rate(grid, values, window) : fit_power_exponent(grid, values, window);
        cell.flags = critical ? "log_rate" : "ok";
      } catch (const DomainError& e) {
        cell.flags = e.what();
      }
    }
  };

  const int workers = std::max(1, std::min<int>(options.threads, static_cast<int>(options.alphas.size())));
  if (workers == 1) {
    for (std::size_t ai = 0; ai < options.alphas.size(); ++ai) run_alpha(ai);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t ai = next++; ai < options.alphas.size(); ai = next++) run_alpha(ai);
      });
    }
    for (auto& t : pool) t.join();
  }
  return cells;
}

void write_crossover_csv(std::ostream& out, const std::vector<CrossoverCell>& cells) {
  write_csv_row(out, {"alpha", "order", "gamma_hat", "gamma_predicted", "coefficient_hat",
                      "coefficient_predicted", "flags"});
  for (const auto& c : cells) {
    const bool zero = c.prediction.identically_zero;
    write_csv_row(out, {to_string(c.alpha), std::to_string(c.order),
                        c.fit ? format_number(c.fit->exponent) : "nan",
                        format_number(c.prediction.exponent),
                        c.fit ? format_number(c.fit->coefficient) : "nan",
                        zero ? "0" : format_number(c.prediction.coefficient), c.flags});
  }
}

}  // namespace erw
