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

// Normalised moment deviations and the recursions that produce them.
//
// For -1 < alpha < 1/2 the even deviation
//
//   M_n^(2m) = E[(S_n / sqrt(n/(1-2 alpha)))^(2m)] / (2m-1)!! - 1
//
// satisfies the first-order system M_{n+1} = f_n + h_n + g_n M_n, where f
// couples to the lower even orders, g_n = (n/(n+1))^m (1 + 2 m alpha / n) and
// h_n is a known inhomogeneity of size O(n^-2). The deviation is iterated
// directly: forming it as (raw moment) - (reference) would cancel every
// significant digit once n is large.
//
// At alpha = 1/2 the normalisation is sqrt(n log n) and the deviation comes
// from the auxiliary sequence L_n = E[S_n^(2m)] / C(n+m-1, n-1), a plain
// running sum, split as M = I + J + K.

#ifndef ERW_DEVIATIONS_H_
#define ERW_DEVIATIONS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "erw/params.h"

namespace erw {

enum class Normalization { kSubcritical, kCritical };

std::string_view normalization_name(Normalization normalization);

struct DeviationSeries {
  ErwParams params;
  int order = 0;
  Normalization normalization = Normalization::kSubcritical;
  std::vector<std::int64_t> grid;
  std::vector<long double> values;
};

// CSV with header "n,order,value,normalization".
void write_csv(std::ostream& out, const DeviationSeries& series, bool header = true);

inline constexpr int kDefaultPointsPerDecade = 40;

// Strictly increasing integers, geometric in n with the given density,
// always containing n_min and n_max.
std::vector<std::int64_t> geometric_grid(std::int64_t n_min, std::int64_t n_max,
                                         int points_per_decade = kDefaultPointsPerDecade);

// M_n^(2) = -Gamma(n + 2a) / (Gamma(n+1) Gamma(2a)) for alpha < 1/2; exactly
// zero for alpha = 0 and for alpha = -1/2, n >= 2.
long double deviation_second_exact(const ErwParams& params, std::int64_t n);

// Coefficients of the subcritical system for one even order at one time n.
struct RecursionCoefficients {
  long double f = 0;
  long double g = 0;
  long double h = 0;
};

// Trace of one even order 2m on the grid. The deviation splits as
// homogeneous + forced_by_lower + forced_by_inhomogeneity, each started at
// time offset + 1 where offset = j0(2 m alpha).
struct EvenDeviationTrace {
  int order = 0;
  std::int64_t offset = 0;
  std::vector<long double> deviation;
  std::vector<long double> homogeneous;
  std::vector<long double> forced_by_lower;          // F_n
  std::vector<long double> forced_by_inhomogeneity;  // H_n
  std::vector<RecursionCoefficients> coefficients;   // at time n (used for n -> n+1)
};

struct SubcriticalTrace {
  std::vector<std::int64_t> grid;
  std::vector<EvenDeviationTrace> orders;  // orders[m-1] holds order 2m
};

// Iterates the coupled even system for orders 2, 4, ..., 2*max_half_order up
// to grid.back(). Values for times up to 1 + max_m j0(2 m alpha) come from the
// exact rational moments. Requires -1 < alpha < 1/2.
SubcriticalTrace run_subcritical_deviations(const ErwParams& params, int max_half_order,
                                            const std::vector<std::int64_t>& grid);

DeviationSeries deviation_recursion_subcritical(const ErwParams& params, int order,
                                                const std::vector<std::int64_t>& grid);
DeviationSeries deviation_recursion_subcritical(const ErwParams& params, int order,
                                                std::int64_t n_max);

// Inhomogeneity h_n^(2m) from its definition, with the polynomial numerator
// formed in exact arithmetic so the leading cancellation is exact.
long double inhomogeneity(const ErwParams& params, int half_order, std::int64_t n);

struct CriticalOrderTrace {
  int order = 0;
  std::vector<long double> deviation;  // M_n = L_n / t_n - 1
  std::vector<long double> auxiliary;  // L_n
  std::vector<long double> scale;      // t_n
  std::vector<long double> part_i;
  std::vector<long double> part_j;
  std::vector<long double> part_k;
};

struct CriticalTrace {
  std::vector<std::int64_t> grid;
  std::vector<CriticalOrderTrace> orders;  // orders[m-1] holds order 2m
};

// Requires alpha == 1/2 exactly and grid points n >= 2 (log 1 = 0).
CriticalTrace run_critical_deviations(const ErwParams& params, int max_half_order,
                                      const std::vector<std::int64_t>& grid);

DeviationSeries deviation_recursion_critical(const ErwParams& params, int order,
                                             const std::vector<std::int64_t>& grid);
DeviationSeries deviation_recursion_critical(const ErwParams& params, int order,
                                             std::int64_t n_max);

// E[S_n^(2m-1)] divided by (n/(1-2a))^((2m-1)/2), or by (n log n)^((2m-1)/2)
// at alpha = 1/2. The limit moment is 0, so this is already the deviation.
DeviationSeries deviation_odd(const ErwParams& params, int order,
                              const std::vector<std::int64_t>& grid);

// Even orders dispatch to the subcritical or critical engine, odd orders to
// deviation_odd. Throws DomainError for alpha > 1/2.
DeviationSeries deviation_series(const ErwParams& params, int order,
                                 const std::vector<std::int64_t>& grid);

// Solution of x_{n+1} = f_n + g_n x_n started from x_{offset+1} = x_start:
//
//   x_n = P_n (x_start + sum_{j=offset+1}^{n-1} f_j / P_{j+1}),
//   P_n = prod_{k=offset+1}^{n-1} g_k,
//
// in one forward pass. f and g are indexed by time and must cover
// [offset+1, n_max). Throws ContractViolation if g_k == 0 for k > offset.
struct FirstOrderSolution {
  std::int64_t first = 1;               // time of values[0]
  std::vector<long double> values;      // x_first .. x_{n_max}
  std::vector<long double> forced;      // the sum term alone (x_start = 0)
  long double at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - first)); }
};

FirstOrderSolution solve_first_order_recursion(long double x_start,
                                               std::span<const long double> f,
                                               std::span<const long double> g,
                                               std::int64_t offset, std::int64_t n_max);

}  // namespace erw

#endif  // ERW_DEVIATIONS_H_
