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

#include "erw/simulator.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <thread>

#include "erw/asymptotics.h"
#include "erw/errors.h"
#include "erw/io.h"

namespace erw {

namespace {

constexpr int kLanes = 8;

inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

// Runs body(first_replica, count, worker) over batches of kLanes replicas on
// config.threads workers. Batches are claimed dynamically; callers only write
// per-replica slots or per-worker state, so the result does not depend on
// which worker ran which batch.
void for_each_batch(const SimConfig& config,
                    const std::function<void(std::int64_t, int, int)>& body) {
  const std::int64_t batches = (config.replicas + kLanes - 1) / kLanes;
  const int workers = static_cast<int>(std::min<std::int64_t>(config.threads, batches));
  std::atomic<std::int64_t> next{0};
  auto run = [&](int worker) {
    for (std::int64_t b = next++; b < batches; b = next++) {
      const std::int64_t first = b * kLanes;
      const int count = static_cast<int>(std::min<std::int64_t>(kLanes, config.replicas - first));
      body(first, count, worker);
    }
  };
  if (workers <= 1) {
    run(0);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
}

int worker_count(const SimConfig& config) {
  const std::int64_t batches = (config.replicas + kLanes - 1) / kLanes;
  return static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(config.threads, batches)));
}

RunningStats merge_all(std::vector<RunningStats>& parts) {
  RunningStats out = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) out.merge(parts[i]);
  return out;
}

}  // namespace

std::string_view dynamics_name(Dynamics dynamics) {
  return dynamics == Dynamics::kMemoryReplay ? "replay" : "conditional";
}

SimConfig SimConfig::from_params(const ErwParams& params, std::int64_t horizon, std::int64_t replicas,
                                 std::uint64_t seed) {
  SimConfig c;
  c.alpha = params.alpha();
  c.beta = params.beta();
  c.horizon = horizon;
  c.replicas = replicas;
  c.seed = seed;
  return c;
}

void SimConfig::validate() const {
  if (alpha < -1 || alpha > 1) throw DomainError("alpha must lie in [-1,1] for simulation, got " + to_string(alpha));
  if (beta < -1 || beta > 1) throw DomainError("beta must lie in [-1,1], got " + to_string(beta));
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  if (replicas < 1) throw DomainError("replicas must be >= 1");
  if (threads < 1) throw DomainError("threads must be >= 1");
  for (std::int64_t c : checkpoints) {
    if (c < 1 || c > horizon) {
      throw DomainError("checkpoint " + std::to_string(c) + " outside [1, " + std::to_string(horizon) + "]");
    }
  }
}

std::vector<std::int64_t> SimConfig::recording_times() const {
  std::vector<std::int64_t> t = checkpoints;
  t.push_back(horizon);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t replica_seed(std::uint64_t seed, std::uint64_t replica) {
  return splitmix64(seed + replica * 0x9e3779b97f4a7c15ULL);
}

RunningStats simulate_terminal(const SimConfig& config, std::vector<std::int64_t>* terminal) {
  config.validate();
  const std::vector<std::int64_t> times = config.recording_times();
  const double q = (1.0 + static_cast<double>(to_long_double(config.beta))) / 2.0;
  const double a = static_cast<double>(to_long_double(config.alpha));
  // P(X_{n+1} = +1 | S_n) = 0.5 + drift[n] * S_n.
  std::vector<double> drift(static_cast<std::size_t>(config.horizon) + 1, 0.0);
  for (std::int64_t n = 1; n <= config.horizon; ++n) drift[static_cast<std::size_t>(n)] = 0.5 * a / static_cast<double>(n);
  if (terminal != nullptr) terminal->assign(static_cast<std::size_t>(config.replicas), 0);

  std::vector<RunningStats> parts(static_cast<std::size_t>(worker_count(config)), RunningStats(times));
  for_each_batch(config, [&](std::int64_t first, int count, int worker) {
    // A short final batch still runs all lanes; the spare lanes use the
    // seeds of replicas past the end and are never recorded.
    std::mt19937_64 rng[kLanes];
    std::int64_t s[kLanes];
    for (int l = 0; l < kLanes; ++l) {
      rng[l].seed(replica_seed(config.seed, static_cast<std::uint64_t>(first + l)));
      s[l] = uniform01(rng[l]) < q ? 1 : -1;
    }
    RunningStats& stats = parts[static_cast<std::size_t>(worker)];
    std::int64_t n = 1;
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      for (; n < times[ti]; ++n) {
        const double c = drift[static_cast<std::size_t>(n)];
        for (int l = 0; l < kLanes; ++l) {
          const bool up = uniform01(rng[l]) < 0.5 + c * static_cast<double>(s[l]);
          s[l] += 2 * static_cast<std::int64_t>(up) - 1;
        }
      }
      for (int l = 0; l < count; ++l) stats.add(ti, s[l]);
    }
    if (terminal != nullptr) {
      for (int l = 0; l < count; ++l) (*terminal)[static_cast<std::size_t>(first + l)] = s[l];
    }
  });
  return merge_all(parts);
}

RunningStats simulate_replay(const SimConfig& config, std::vector<std::int64_t>* terminal) {
  config.validate();
  if (config.horizon > config.replay_cap) {
    throw ResourceLimitError("replay dynamics stores the full step history; horizon " +
                             std::to_string(config.horizon) + " exceeds the memory cap " +
                             std::to_string(config.replay_cap));
  }
  const std::vector<std::int64_t> times = config.recording_times();
  const double q = (1.0 + static_cast<double>(to_long_double(config.beta))) / 2.0;
  const double p = (1.0 + static_cast<double>(to_long_double(config.alpha))) / 2.0;
  if (terminal != nullptr) terminal->assign(static_cast<std::size_t>(config.replicas), 0);

  const int workers = worker_count(config);
  std::vector<RunningStats> parts(static_cast<std::size_t>(workers), RunningStats(times));
  std::vector<std::vector<std::int8_t>> history(static_cast<std::size_t>(workers),
                                                std::vector<std::int8_t>(static_cast<std::size_t>(config.horizon) + 1));
  for_each_batch(config, [&](std::int64_t first, int count, int worker) {
    auto& x = history[static_cast<std::size_t>(worker)];
    RunningStats& stats = parts[static_cast<std::size_t>(worker)];
    for (int l = 0; l < count; ++l) {
      std::mt19937_64 rng(replica_seed(config.seed, static_cast<std::uint64_t>(first + l)));
      x[1] = uniform01(rng) < q ? 1 : -1;
      std::int64_t s = x[1];
      std::int64_t n = 1;
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        for (; n < times[ti]; ++n) {
          const auto u = 1 + static_cast<std::int64_t>(uniform01(rng) * static_cast<double>(n));
          const std::int8_t recalled = x[static_cast<std::size_t>(u)];
          const std::int8_t step = uniform01(rng) < p ? recalled : static_cast<std::int8_t>(-recalled);
          x[static_cast<std::size_t>(n + 1)] = step;
          s += step;
        }
        stats.add(ti, s);
      }
      if (terminal != nullptr) (*terminal)[static_cast<std::size_t>(first + l)] = s;
    }
  });
  return merge_all(parts);
}

RunningStats simulate(const SimConfig& config, std::vector<std::int64_t>* terminal) {
  return config.dynamics == Dynamics::kMemoryReplay ? simulate_replay(config, terminal)
                                                     : simulate_terminal(config, terminal);
}

long double simulation_scale(const SimConfig& config, std::int64_t n) {
  return variance_scale(config.alpha, static_cast<long double>(n));
}

void write_stats_csv(std::ostream& out, const SimConfig& config, const RunningStats& stats) {
  std::vector<std::string> header{"n", "count"};
  for (int k = 1; k <= kMaxStatOrder; ++k) header.push_back("m" + std::to_string(k));
  header.push_back("ks");
  write_csv_row(out, header);
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const std::int64_t n = stats.checkpoints()[i];
    const long double scale = std::sqrt(simulation_scale(config, n));
    std::vector<std::string> row{std::to_string(n), std::to_string(stats.count(i))};
    for (int k = 1; k <= kMaxStatOrder; ++k) row.push_back(format_number(stats.moment(i, k, scale)));
    row.push_back(format_number(stats.kolmogorov(i, scale)));
    write_csv_row(out, row);
  }
}

std::vector<FirstReturnSample> first_return_times(const SimConfig& config) {
  config.validate();
  const double q = (1.0 + static_cast<double>(to_long_double(config.beta))) / 2.0;
  const double a = static_cast<double>(to_long_double(config.alpha));
  std::vector<double> drift(static_cast<std::size_t>(config.horizon) + 1, 0.0);
  for (std::int64_t n = 1; n <= config.horizon; ++n) drift[static_cast<std::size_t>(n)] = 0.5 * a / static_cast<double>(n);
  std::vector<FirstReturnSample> out(static_cast<std::size_t>(config.replicas));
  for_each_batch(config, [&](std::int64_t first, int count, int) {
    for (int l = 0; l < count; ++l) {
      std::mt19937_64 rng(replica_seed(config.seed, static_cast<std::uint64_t>(first + l)));
      std::int64_t s = uniform01(rng) < q ? 1 : -1;
      FirstReturnSample r{config.horizon, true};
      for (std::int64_t n = 1; n < config.horizon; ++n) {
        s += uniform01(rng) < 0.5 + drift[static_cast<std::size_t>(n)] * static_cast<double>(s) ? 1 : -1;
        if (s == 0) {
          r = {n + 1, false};
          break;
        }
      }
      out[static_cast<std::size_t>(first + l)] = r;
    }
  });
  return out;
}

long double censored_mean(const std::vector<FirstReturnSample>& samples, std::int64_t horizon) {
  if (samples.empty()) throw ContractViolation("censored_mean needs samples");
  long double sum = 0;  // integer-valued terms: exact below 2^64
  for (const auto& s : samples) {
    if (s.censored && s.time < horizon) {
      throw ContractViolation("censored_mean horizon exceeds the simulated horizon");
    }
    sum += static_cast<long double>(std::min(s.time, horizon));
  }
  return sum / static_cast<long double>(samples.size());
}

long double censored_fraction(const std::vector<FirstReturnSample>& samples, std::int64_t horizon) {
  if (samples.empty()) throw ContractViolation("censored_fraction needs samples");
  std::size_t c = 0;
  for (const auto& s : samples) c += (s.censored || s.time > horizon) ? 1 : 0;
  return static_cast<long double>(c) / static_cast<long double>(samples.size());
}

}  // namespace erw
