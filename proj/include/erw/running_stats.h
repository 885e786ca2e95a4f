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

#ifndef ERW_RUNNING_STATS_H_
#define ERW_RUNNING_STATS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace erw {

inline constexpr int kMaxStatOrder = 12;

// Per-checkpoint accumulator of walk positions. S_n takes only the n+1 values
// -n, -n+2, ..., n, so the full empirical law is kept as integer counts.
// Merging adds counts, which is exact, associative and commutative: any
// partition of the replicas over any number of workers gives identical state.
// Moments and the Kolmogorov distance are derived from the counts on demand.
class RunningStats {
 public:
  RunningStats() = default;
  // Checkpoints must be strictly increasing and >= 1.
  explicit RunningStats(std::vector<std::int64_t> checkpoints);

  const std::vector<std::int64_t>& checkpoints() const { return checkpoints_; }
  std::size_t size() const { return checkpoints_.size(); }

  // Records S at checkpoint index i. Requires |s| <= n and s = n (mod 2).
  void add(std::size_t i, std::int64_t s);
  void add(std::size_t i, std::int64_t s, std::uint64_t times);
  void merge(const RunningStats& other);

  std::uint64_t count(std::size_t i) const;
  std::uint64_t count_at_value(std::size_t i, std::int64_t s) const;

  // Empirical E[(S/scale)^k], k in 1..kMaxStatOrder.
  long double moment(std::size_t i, int k, long double scale) const;
  // Standard error of that mean: sqrt((E[Y^2k] - E[Y^k]^2) / count).
  long double moment_standard_error(std::size_t i, int k, long double scale) const;
  // sup_x |F_emp(x) - Phi(x)| for Y = S/scale, taken over both one-sided
  // limits at every atom.
  long double kolmogorov(std::size_t i, long double scale) const;

  bool operator==(const RunningStats& other) const = default;

 private:
  void check_index(std::size_t i) const;

  std::vector<std::int64_t> checkpoints_;
  // counts_[i][(s + n) / 2] for n = checkpoints_[i].
  std::vector<std::vector<std::uint64_t>> counts_;
};

// Standard normal CDF.
long double normal_cdf(long double x);

// Kolmogorov distance of a sorted sample to N(0, 1).
long double kolmogorov_distance(const std::vector<double>& sorted_samples);

}  // namespace erw

#endif  // ERW_RUNNING_STATS_H_
