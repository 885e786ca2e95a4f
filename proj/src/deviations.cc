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

#include "erw/deviations.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "erw/errors.h"
#include "erw/io.h"
#include "erw/moments.h"
#include "erw/special.h"
#include "erw/summation.h"

namespace erw {

namespace {

// Times at or below this use the exact rational moments as the state.
constexpr std::int64_t kExactPrefix = 32;

void check_grid(const std::vector<std::int64_t>& grid, std::int64_t n_min) {
  if (grid.empty()) throw ContractViolation("deviation grid is empty");
  if (grid.front() < n_min) {
    throw ContractViolation("deviation grid must start at n >= " + std::to_string(n_min));
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw ContractViolation("deviation grid must be strictly increasing");
  }
}

void check_half_order(int m) {
  if (m < 1) throw ContractViolation("even order must be >= 2");
}

Rational rational_power(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

bool is_critical(const ErwParams& params) { return params.alpha() == Rational(1, 2); }

// Per-order constants of the subcritical system for order 2m.
struct SubcriticalOrder {
  int m = 0;
  std::int64_t offset = 0;
  // f: sum_{l<m} (lead[l] x^l y^(m-l) + tail[l] x^(l-1) y^(m-l+1)) M^(2l),
  // with x = n/(n+1), y = 1/(n+1).
  std::vector<long double> lead;
  std::vector<long double> tail;
  // h = Q(n) / (n+1)^m, Q in ascending powers.
  std::vector<long double> q;
  long double two_m_alpha = 0;
};

// Exact coefficients of Q(n) = P(n) - (n+1)^m; the top two vanish identically.
std::vector<Rational> inhomogeneity_polynomial(const Rational& alpha, int m) {
  const Rational one_minus = 1 - 2 * alpha;
  const Rational dfm(double_factorial_odd(m));
  std::vector<Rational> q(static_cast<std::size_t>(m) + 1, Rational(0));
  q[0] += rational_power(one_minus, m) / dfm;
  for (int l = 1; l <= m; ++l) {
    Rational w = Rational(double_factorial_odd(l)) / dfm * rational_power(one_minus, m - l);
    q[static_cast<std::size_t>(l)] += w * Rational(binomial(2 * m, 2 * l));
    q[static_cast<std::size_t>(l - 1)] += w * alpha * Rational(binomial(2 * m, 2 * l - 1));
  }
  for (int i = 0; i <= m; ++i) q[static_cast<std::size_t>(i)] -= Rational(binomial(m, i));
  for (auto& c : q) c.canonicalize();
  return q;
}

SubcriticalOrder make_subcritical_order(const Rational& alpha, int m) {
  SubcriticalOrder o;
  o.m = m;
  o.offset = product_asymptote(2 * m * alpha).offset;
  o.two_m_alpha = to_long_double(Rational(2 * m * alpha));
  const Rational one_minus = 1 - 2 * alpha;
  const Rational dfm(double_factorial_odd(m));
  o.lead.assign(static_cast<std::size_t>(m), 0.0L);
  o.tail.assign(static_cast<std::size_t>(m), 0.0L);
  for (int l = 1; l < m; ++l) {
    Rational w = Rational(double_factorial_odd(l)) / dfm * rational_power(one_minus, m - l);
    o.lead[static_cast<std::size_t>(l)] = to_long_double(Rational(w * Rational(binomial(2 * m, 2 * l))));
    o.tail[static_cast<std::size_t>(l)] =
        to_long_double(Rational(w * alpha * Rational(binomial(2 * m, 2 * l - 1))));
  }
  for (const auto& c : inhomogeneity_polynomial(alpha, m)) o.q.push_back(to_long_double(c));
  return o;
}

long double horner(const std::vector<long double>& q, long double x) {
  long double r = 0.0L;
  for (auto it = q.rbegin(); it != q.rend(); ++it) r = r * x + *it;
  return r;
}

// Exact M_n^(2m) = E[S_n^(2m)] (1-2a)^m / (n^m (2m-1)!!) - 1.
Rational exact_even_deviation(const Rational& moment, const Rational& alpha, int m,
                              std::int64_t n) {
  Rational scale = rational_power(1 - 2 * alpha, m) /
                   (rational_power(Rational(static_cast<long>(n)), m) *
                    Rational(double_factorial_odd(m)));
  Rational out = moment * scale - 1;
  out.canonicalize();
  return out;
}

}  // namespace

std::string_view normalization_name(Normalization normalization) {
  return normalization == Normalization::kCritical ? "critical" : "subcritical";
}

void write_csv(std::ostream& out, const DeviationSeries& series, bool header) {
  if (header) write_csv_row(out, {"n", "order", "value", "normalization"});
  const std::string order = std::to_string(series.order);
  const std::string norm(normalization_name(series.normalization));
  for (std::size_t i = 0; i < series.grid.size(); ++i) {
    write_csv_row(out, {std::to_string(series.grid[i]), order, format_number(series.values[i]), norm});
  }
}

std::vector<std::int64_t> geometric_grid(std::int64_t n_min, std::int64_t n_max,
                                         int points_per_decade) {
  if (n_min < 1 || n_max < n_min) throw ContractViolation("geometric_grid requires 1 <= n_min <= n_max");
  if (points_per_decade < 1) throw ContractViolation("geometric_grid requires points_per_decade >= 1");
  std::vector<std::int64_t> grid{n_min};
  const long double lo = std::log10(static_cast<long double>(n_min));
  const long double hi = std::log10(static_cast<long double>(n_max));
  const auto steps = static_cast<std::int64_t>(std::ceil((hi - lo) * points_per_decade));
  for (std::int64_t i = 1; i < steps; ++i) {
    const long double e = lo + static_cast<long double>(i) / points_per_decade;
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0L, e)));
    if (n > grid.back() && n < n_max) grid.push_back(n);
  }
  if (n_max > grid.back()) grid.push_back(n_max);
  return grid;
}

long double deviation_second_exact(const ErwParams& params, std::int64_t n) {
  if (n < 1) throw ContractViolation("deviation_second_exact requires n >= 1");
  if (params.alpha() >= Rational(1, 2)) {
    throw DomainError("deviation_second_exact requires alpha < 1/2, got " + to_string(params.alpha()));
  }
  return 0.0L - pochhammer_ratio(2.0L * params.alpha_ld(), n);
}

long double inhomogeneity(const ErwParams& params, int half_order, std::int64_t n) {
  check_half_order(half_order);
  if (n < 1) throw ContractViolation("inhomogeneity requires n >= 1");
  std::vector<long double> q;
  for (const auto& c : inhomogeneity_polynomial(params.alpha(), half_order)) q.push_back(to_long_double(c));
  const long double nn = static_cast<long double>(n);
  return horner(q, nn) / std::pow(nn + 1.0L, half_order);
}

SubcriticalTrace run_subcritical_deviations(const ErwParams& params, int max_half_order,
                                            const std::vector<std::int64_t>& grid) {
  check_half_order(max_half_order);
  check_grid(grid, 1);
  if (params.alpha() >= Rational(1, 2)) {
    throw DomainError("subcritical deviations require alpha < 1/2, got " + to_string(params.alpha()));
  }
  const int M = max_half_order;
  const std::int64_t n_max = grid.back();
  const Rational& alpha = params.alpha();

  std::vector<SubcriticalOrder> orders;
  std::int64_t n_exact = kExactPrefix;
  for (int m = 1; m <= M; ++m) {
    orders.push_back(make_subcritical_order(alpha, m));
    n_exact = std::max(n_exact, orders.back().offset + 1);
  }
  n_exact = std::min(n_exact, n_max);

  // Exact deviations for n = 1..n_exact.
  std::vector<std::vector<long double>> exact(static_cast<std::size_t>(n_exact) + 1,
                                              std::vector<long double>(static_cast<std::size_t>(M) + 1));
  {
    ExactMomentRecursion engine(params, 2 * M, MomentOptions{2 * M, std::size_t{1} << 24});
    for (std::int64_t n = 1; n <= n_exact; ++n) {
      engine.advance_to(n);
      for (int m = 1; m <= M; ++m) {
        exact[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
            to_long_double(exact_even_deviation(engine.moment(2 * m), alpha, m, n));
      }
    }
  }

  SubcriticalTrace trace;
  trace.grid = grid;
  trace.orders.resize(static_cast<std::size_t>(M));
  for (int m = 1; m <= M; ++m) {
    auto& t = trace.orders[static_cast<std::size_t>(m - 1)];
    t.order = 2 * m;
    t.offset = orders[static_cast<std::size_t>(m - 1)].offset;
  }

  // State, indexed by m (slot 0 unused).
  std::vector<long double> dev(static_cast<std::size_t>(M) + 1);
  std::vector<long double> homog(dev.size()), forced_f(dev.size()), forced_h(dev.size());
  std::vector<long double> next(dev.size());
  std::vector<RecursionCoefficients> coef(dev.size());
  std::vector<long double> xp(static_cast<std::size_t>(M) + 2), yp(xp.size());
  for (int m = 1; m <= M; ++m) {
    dev[static_cast<std::size_t>(m)] = exact[1][static_cast<std::size_t>(m)];
    homog[static_cast<std::size_t>(m)] = dev[static_cast<std::size_t>(m)];
  }

  std::size_t gi = 0;
  for (std::int64_t n = 1;; ++n) {
    const long double nn = static_cast<long double>(n);
    const long double x = nn / (nn + 1.0L);
    const long double y = 1.0L / (nn + 1.0L);
    xp[0] = yp[0] = 1.0L;
    for (int i = 1; i <= M + 1; ++i) {
      xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
      yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * y;
    }
    for (int m = 1; m <= M; ++m) {
      const auto& o = orders[static_cast<std::size_t>(m - 1)];
      long double f = 0.0L;
      for (int l = 1; l < m; ++l) {
        const auto L = static_cast<std::size_t>(l);
        f += (o.lead[L] * xp[L] * yp[static_cast<std::size_t>(m - l)] +
              o.tail[L] * xp[L - 1] * yp[static_cast<std::size_t>(m - l + 1)]) *
             dev[L];
      }
      auto& c = coef[static_cast<std::size_t>(m)];
      c.f = f;
      c.g = xp[static_cast<std::size_t>(m)] * (1.0L + o.two_m_alpha / nn);
      c.h = horner(o.q, nn) * yp[static_cast<std::size_t>(m)];
    }
    while (gi < grid.size() && grid[gi] == n) {
      for (int m = 1; m <= M; ++m) {
        const auto s = static_cast<std::size_t>(m);
        auto& t = trace.orders[s - 1];
        t.deviation.push_back(dev[s]);
        t.homogeneous.push_back(homog[s]);
        t.forced_by_lower.push_back(forced_f[s]);
        t.forced_by_inhomogeneity.push_back(forced_h[s]);
        t.coefficients.push_back(coef[s]);
      }
      ++gi;
    }
    if (n == n_max) break;

    for (int m = 1; m <= M; ++m) {
      const auto s = static_cast<std::size_t>(m);
      const auto& c = coef[s];
      next[s] = c.f + c.h + c.g * dev[s];
      if (n >= orders[s - 1].offset + 1) {
        homog[s] *= c.g;
        forced_f[s] = c.f + c.g * forced_f[s];
        forced_h[s] = c.h + c.g * forced_h[s];
      }
    }
    for (int m = 1; m <= M; ++m) {
      const auto s = static_cast<std::size_t>(m);
      dev[s] = next[s];
      if (n + 1 <= n_exact) dev[s] = exact[static_cast<std::size_t>(n + 1)][s];
      if (n + 1 <= orders[s - 1].offset + 1) {
        homog[s] = dev[s];
        forced_f[s] = forced_h[s] = 0.0L;
      }
    }
  }
  return trace;
}

DeviationSeries deviation_recursion_subcritical(const ErwParams& params, int order,
                                                const std::vector<std::int64_t>& grid) {
  if (order < 2 || order % 2 != 0) {
    throw ContractViolation("deviation_recursion_subcritical takes an even order >= 2");
  }
  SubcriticalTrace trace = run_subcritical_deviations(params, order / 2, grid);
  DeviationSeries out{params, order, Normalization::kSubcritical, grid,
                      std::move(trace.orders.back().deviation)};
  return out;
}

DeviationSeries deviation_recursion_subcritical(const ErwParams& params, int order,
                                                std::int64_t n_max) {
  return deviation_recursion_subcritical(params, order, geometric_grid(1, n_max));
}

CriticalTrace run_critical_deviations(const ErwParams& params, int max_half_order,
                                      const std::vector<std::int64_t>& grid) {
  check_half_order(max_half_order);
  check_grid(grid, 2);
  if (!is_critical(params)) {
    throw DomainError("critical deviations require alpha = 1/2, got " + to_string(params.alpha()));
  }
  const int M = max_half_order;
  const std::int64_t n_max = grid.back();

  // Small exact constants: C(2m, k), (2l-1)!!, l!.
  std::vector<std::vector<long double>> binom(static_cast<std::size_t>(2 * M) + 1);
  for (int k = 0; k <= 2 * M; ++k) {
    for (int j = 0; j <= k; ++j) {
      binom[static_cast<std::size_t>(k)].push_back(
          static_cast<long double>(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)).get_d()));
    }
  }
  std::vector<long double> dfact(static_cast<std::size_t>(M) + 1), fact(static_cast<std::size_t>(M) + 1);
  dfact[0] = fact[0] = 1.0L;
  for (int l = 1; l <= M; ++l) {
    dfact[static_cast<std::size_t>(l)] = dfact[static_cast<std::size_t>(l - 1)] * (2 * l - 1);
    fact[static_cast<std::size_t>(l)] = fact[static_cast<std::size_t>(l - 1)] * l;
  }
  // C(j+l-1, j-1) = j (j+1) ... (j+l-1) / l!  and  1/C(j+m, j) = m! / ((j+1) ... (j+m)).
  auto rising_binom = [&](long double j, int l) {
    long double r = 1.0L;
    for (int i = 0; i < l; ++i) r *= (j + i);
    return r / fact[static_cast<std::size_t>(l)];
  };
  auto inv_binom = [&](long double j, int m) {
    long double r = fact[static_cast<std::size_t>(m)];
    for (int i = 1; i <= m; ++i) r /= (j + i);
    return r;
  };
  // t_j^(2l) = (j log j)^l (2l-1)!! / C(j+l-1, j-1).
  auto scale_at = [&](long double j, int l) {
    const long double u = j * std::log(j);
    long double r = dfact[static_cast<std::size_t>(l)] * fact[static_cast<std::size_t>(l)];
    for (int i = 0; i < l; ++i) r *= u / (j + i);
    return r;
  };

  CriticalTrace trace;
  trace.grid = grid;
  trace.orders.resize(static_cast<std::size_t>(M));
  for (int m = 1; m <= M; ++m) trace.orders[static_cast<std::size_t>(m - 1)].order = 2 * m;

  const auto slots = static_cast<std::size_t>(M) + 1;
  std::vector<CompensatedSum<long double>> aux(slots, CompensatedSum<long double>(1.0L));
  std::vector<CompensatedSum<long double>> sum_i(slots, CompensatedSum<long double>(1.0L));
  std::vector<CompensatedSum<long double>> sum_j(slots), sum_k(slots);
  std::vector<long double> raw(slots), dev(slots), inc(slots), jinc(slots), kinc(slots);

  std::size_t gi = 0;
  for (std::int64_t n = 1;; ++n) {
    const long double j = static_cast<long double>(n);
    const long double u = j * std::log(j);
    // Raw moments and deviations of every order at time j.
    for (int l = 1; l <= M; ++l) {
      const auto s = static_cast<std::size_t>(l);
      raw[s] = aux[s].value() * rising_binom(j, l);
      dev[s] = n == 1 ? 0.0L : aux[s].value() / scale_at(j, l) - 1.0L;
    }
    while (gi < grid.size() && grid[gi] == n) {
      for (int m = 1; m <= M; ++m) {
        const auto s = static_cast<std::size_t>(m);
        const long double t = scale_at(j, m);
        auto& tr = trace.orders[s - 1];
        tr.deviation.push_back(dev[s]);
        tr.auxiliary.push_back(aux[s].value());
        tr.scale.push_back(t);
        tr.part_i.push_back(sum_i[s].value() / t);
        tr.part_j.push_back(sum_j[s].value() / t - 1.0L);
        tr.part_k.push_back(sum_k[s].value() / t);
      }
      ++gi;
    }
    if (n == n_max) break;

    for (int m = 1; m <= M; ++m) {
      const auto s = static_cast<std::size_t>(m);
      const long double ib = inv_binom(j, m);
      long double acc = 1.0L;
      long double jacc = 0.0L;
      long double kacc = 0.0L;
      long double up = 1.0L;  // (j log j)^l
      for (int l = 1; l < m; ++l) {
        const auto L = static_cast<std::size_t>(l);
        up *= u;
        const long double c = binom[2 * s][2 * L] + binom[2 * s][2 * L - 1] / (2.0L * j);
        acc += c * raw[L];
        const long double d = ib * up * dfact[L];
        jacc += c * d;
        // d_1 M_1 is taken as its limit ib * E[S_1^(2l)] = ib.
        kacc += c * (n == 1 ? ib : d * dev[L]);
      }
      inc[s] = ib * acc;
      jinc[s] = jacc;
      kinc[s] = kacc;
    }
    for (int m = 1; m <= M; ++m) {
      const auto s = static_cast<std::size_t>(m);
      aux[s] += inc[s];
      sum_i[s] += inv_binom(j, m);
      sum_j[s] += jinc[s];
      sum_k[s] += kinc[s];
    }
  }
  return trace;
}

DeviationSeries deviation_recursion_critical(const ErwParams& params, int order,
                                             const std::vector<std::int64_t>& grid) {
  if (order < 2 || order % 2 != 0) {
    throw ContractViolation("deviation_recursion_critical takes an even order >= 2");
  }
  CriticalTrace trace = run_critical_deviations(params, order / 2, grid);
  return DeviationSeries{params, order, Normalization::kCritical, grid,
                         std::move(trace.orders.back().deviation)};
}

DeviationSeries deviation_recursion_critical(const ErwParams& params, int order,
                                             std::int64_t n_max) {
  return deviation_recursion_critical(params, order, geometric_grid(2, n_max));
}

DeviationSeries deviation_odd(const ErwParams& params, int order,
                              const std::vector<std::int64_t>& grid) {
  if (order < 1 || order % 2 == 0) throw ContractViolation("deviation_odd takes an odd order >= 1");
  if (params.alpha() > Rational(1, 2)) {
    throw DomainError("deviations are defined for alpha <= 1/2, got " + to_string(params.alpha()));
  }
  const bool critical = is_critical(params);
  check_grid(grid, critical ? 2 : 1);
  const long double a = params.alpha_ld();
  const long double half_power = static_cast<long double>(order) / 2.0L;

  DeviationSeries out{params, order, critical ? Normalization::kCritical : Normalization::kSubcritical,
                      grid, {}};
  FloatMomentRecursion engine(params, order);
  for (std::int64_t n : grid) {
    engine.advance_to(n);
    const long double nn = static_cast<long double>(n);
    const long double var = critical ? nn * std::log(nn) : nn / (1.0L - 2.0L * a);
    out.values.push_back(engine.moment(order) / std::pow(var, half_power));
  }
  return out;
}

DeviationSeries deviation_series(const ErwParams& params, int order,
                                 const std::vector<std::int64_t>& grid) {
  if (params.alpha() > Rational(1, 2)) {
    throw DomainError("deviations are defined for alpha <= 1/2, got " + to_string(params.alpha()));
  }
  if (order % 2 == 1) return deviation_odd(params, order, grid);
  if (is_critical(params)) return deviation_recursion_critical(params, order, grid);
  return deviation_recursion_subcritical(params, order, grid);
}

FirstOrderSolution solve_first_order_recursion(long double x_start,
                                               std::span<const long double> f,
                                               std::span<const long double> g,
                                               std::int64_t offset, std::int64_t n_max) {
  if (offset < 0 || n_max < offset + 1) {
    throw ContractViolation("solve_first_order_recursion requires 0 <= offset < n_max");
  }
  if (static_cast<std::int64_t>(f.size()) < n_max || static_cast<std::int64_t>(g.size()) < n_max) {
    throw ContractViolation("solve_first_order_recursion: f and g must cover times below n_max");
  }
  FirstOrderSolution out;
  out.first = offset + 1;
  out.values.push_back(x_start);
  out.forced.push_back(0.0L);
  long double product = 1.0L;  // P_n
  CompensatedSum<long double> sum;
  for (std::int64_t k = offset + 1; k < n_max; ++k) {
    const long double gk = g[static_cast<std::size_t>(k)];
    if (gk == 0.0L) {
      throw ContractViolation("solve_first_order_recursion: g vanishes at n=" + std::to_string(k) +
                              " beyond the offset");
    }
    product *= gk;  // now P_{k+1}
    sum += f[static_cast<std::size_t>(k)] / product;
    out.values.push_back(product * (x_start + sum.value()));
    out.forced.push_back(product * sum.value());
  }
  return out;
}

}  // namespace erw
