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

// Monte Carlo simulation of the walk.
//
// Replica r draws from its own std::mt19937_64 seeded with output r + 1 of the
// splitmix64 sequence started at the master seed, so every replica's path
// depends only on (seed, r) and the output is the same for any thread count.

#ifndef ERW_SIMULATOR_H_
#define ERW_SIMULATOR_H_

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "erw/params.h"
#include "erw/rational.h"
#include "erw/running_stats.h"

namespace erw {

enum class Dynamics { kConditionalLaw, kMemoryReplay };

std::string_view dynamics_name(Dynamics dynamics);

inline constexpr std::int64_t kDefaultReplayCap = 100000;

struct SimConfig {
  // Closed ranges: alpha = +-1 and beta = +-1 are valid for simulation.
  Rational alpha;
  Rational beta;
  std::int64_t horizon = 1;
  std::int64_t replicas = 1;
  std::uint64_t seed = 0;
  Dynamics dynamics = Dynamics::kConditionalLaw;
  // Extra recording times; the horizon is always recorded.
  std::vector<std::int64_t> checkpoints;
  int threads = 1;
  // Largest horizon accepted by the replay dynamics (one byte per step per
  // worker is held).
  std::int64_t replay_cap = kDefaultReplayCap;

  static SimConfig from_params(const ErwParams& params, std::int64_t horizon, std::int64_t replicas,
                               std::uint64_t seed);

  // Throws DomainError on out-of-range fields.
  void validate() const;
  // Sorted, deduplicated checkpoints including the horizon.
  std::vector<std::int64_t> recording_times() const;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t replica_seed(std::uint64_t seed, std::uint64_t replica);

// O(1) conditional-law dynamics: X_1 = +1 w.p. (1+beta)/2, then
// X_{n+1} = +1 w.p. (1 + alpha S_n / n) / 2. When terminal is non-null it
// receives S_horizon of every replica in replica order.
RunningStats simulate_terminal(const SimConfig& config, std::vector<std::int64_t>* terminal = nullptr);

// Literal dynamics: U_n uniform on {1..n}, X_{n+1} = X_{U_n} w.p. (1+alpha)/2,
// else -X_{U_n}. Throws ResourceLimitError above config.replay_cap.
RunningStats simulate_replay(const SimConfig& config, std::vector<std::int64_t>* terminal = nullptr);

// Dispatches on config.dynamics.
RunningStats simulate(const SimConfig& config, std::vector<std::int64_t>* terminal = nullptr);

// Normalising variance used for reported moments: variance_scale(alpha, n).
long double simulation_scale(const SimConfig& config, std::int64_t n);

// CSV: n, count, m1..m12 (moments of S_n / sqrt(scale)), ks.
void write_stats_csv(std::ostream& out, const SimConfig& config, const RunningStats& stats);

struct FirstReturnSample {
  std::int64_t time = 0;  // first n > 0 with S_n = 0, or the horizon if censored
  bool censored = false;
};

// One sample per replica in replica order, censored at config.horizon.
std::vector<FirstReturnSample> first_return_times(const SimConfig& config);

// Mean of min(R, horizon) over the samples. Requires horizon <= the horizon
// the samples were censored at.
long double censored_mean(const std::vector<FirstReturnSample>& samples, std::int64_t horizon);
// Fraction of samples with R > horizon.
long double censored_fraction(const std::vector<FirstReturnSample>& samples, std::int64_t horizon);

}  // namespace erw

#endif  // ERW_SIMULATOR_H_
