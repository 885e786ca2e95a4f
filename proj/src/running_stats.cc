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

#include "erw/running_stats.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "erw/errors.h"
#include "erw/summation.h"

namespace erw {

RunningStats::RunningStats(std::vector<std::int64_t> checkpoints) : checkpoints_(std::move(checkpoints)) {
  for (std::size_t i = 0; i < checkpoints_.size(); ++i) {
    if (checkpoints_[i] < 1 || (i > 0 && checkpoints_[i] <= checkpoints_[i - 1])) {
      throw ContractViolation("RunningStats checkpoints must be strictly increasing and >= 1");
    }
    counts_.emplace_back(static_cast<std::size_t>(checkpoints_[i]) + 1, 0);
  }
}

void RunningStats::check_index(std::size_t i) const {
  if (i >= checkpoints_.size()) throw ContractViolation("checkpoint index out of range");
}

void RunningStats::add(std::size_t i, std::int64_t s) { add(i, s, 1); }

void RunningStats::add(std::size_t i, std::int64_t s, std::uint64_t times) {
  check_index(i);
  const std::int64_t n = checkpoints_[i];
  if (s < -n || s > n || ((s + n) & 1) != 0) {
    throw ContractViolation("position " + std::to_string(s) + " impossible at n=" + std::to_string(n));
  }
  counts_[i][static_cast<std::size_t>((s + n) / 2)] += times;
}

void RunningStats::merge(const RunningStats& other) {
  if (other.checkpoints_ != checkpoints_) throw ContractViolation("merging RunningStats with different checkpoints");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    for (std::size_t j = 0; j < counts_[i].size(); ++j) counts_[i][j] += other.counts_[i][j];
  }
}

std::uint64_t RunningStats::count(std::size_t i) const {
  check_index(i);
  std::uint64_t c = 0;
  for (std::uint64_t v : counts_[i]) c += v;
  return c;
}

std::uint64_t RunningStats::count_at_value(std::size_t i, std::int64_t s) const {
  check_index(i);
  const std::int64_t n = checkpoints_[i];
  if (s < -n || s > n || ((s + n) & 1) != 0) return 0;
  return counts_[i][static_cast<std::size_t>((s + n) / 2)];
}

long double RunningStats::moment(std::size_t i, int k, long double scale) const {
  check_index(i);
  if (k < 1 || k > 2 * kMaxStatOrder) throw ContractViolation("moment order out of range");
  const std::int64_t n = checkpoints_[i];
  CompensatedSum<long double> sum;
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < counts_[i].size(); ++j) {
    if (counts_[i][j] == 0) continue;
    const long double y = static_cast<long double>(2 * static_cast<std::int64_t>(j) - n) / scale;
    sum += static_cast<long double>(counts_[i][j]) * std::pow(y, k);
    total += counts_[i][j];
  }
  if (total == 0) return std::nanl("");
  return sum.value() / static_cast<long double>(total);
}

long double RunningStats::moment_standard_error(std::size_t i, int k, long double scale) const {
  const long double m1 = moment(i, k, scale);
  const long double m2 = moment(i, 2 * k, scale);
  return std::sqrt(std::max(0.0L, m2 - m1 * m1) / static_cast<long double>(count(i)));
}

long double RunningStats::kolmogorov(std::size_t i, long double scale) const {
  check_index(i);
  const std::int64_t n = checkpoints_[i];
  const long double total = static_cast<long double>(count(i));
  if (total == 0) return std::nanl("");
  long double below = 0;  // count strictly below the current atom
  long double d = 0;
  for (std::size_t j = 0; j < counts_[i].size(); ++j) {
    if (counts_[i][j] == 0) continue;
    const long double y = static_cast<long double>(2 * static_cast<std::int64_t>(j) - n) / scale;
    const long double phi = normal_cdf(y);
    const long double above = below + static_cast<long double>(counts_[i][j]);
    d = std::max({d, std::abs(below / total - phi), std::abs(above / total - phi)});
    below = above;
  }
  return d;
}

long double normal_cdf(long double x) { return 0.5L * std::erfc(-x / std::sqrt(2.0L)); }

long double kolmogorov_distance(const std::vector<double>& sorted_samples) {
  if (sorted_samples.empty()) throw ContractViolation("kolmogorov_distance needs a nonempty sample");
  const long double r = static_cast<long double>(sorted_samples.size());
  long double d = 0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    if (i > 0 && sorted_samples[i] < sorted_samples[i - 1]) {
      throw ContractViolation("kolmogorov_distance needs a sorted sample");
    }
    const long double phi = normal_cdf(sorted_samples[i]);
    d = std::max({d, static_cast<long double>(i + 1) / r - phi, phi - static_cast<long double>(i) / r});
  }
  return d;
}

}  // namespace erw
