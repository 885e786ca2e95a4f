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

#include "cli.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "erw/asymptotics.h"
#include "erw/deviations.h"
#include "erw/errors.h"
#include "erw/io.h"
#include "erw/moments.h"
#include "erw/params.h"
#include "erw/rate_analysis.h"
#include "erw/rational.h"
#include "erw/simulator.h"
#include "erw/version.h"
#include "json.hpp"
#include "table.h"

namespace erw::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kRatesReferenceNmax = 1000000;

struct Common {
  std::string format = "csv";
  std::string output;
  std::optional<int> threads;
};

struct RunResult {
  Table table;
  Json parameters = Json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> warnings;
  // Extra outputs written next to --output as <output><suffix>.
  std::vector<std::pair<std::string, std::string>> extra;
};

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string item(text.substr(start, end - start));
    if (item.empty()) throw DomainError("empty item in list '" + std::string(text) + "'");
    out.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational rational_flag(const std::string& name, const std::string& text, RunResult& r) {
  ParsedRational p = parse_rational(text);
  if (p.inexact_in_binary) {
    r.warnings.push_back("--" + name + " " + text + " has no exact binary representation; using the exact rational " +
                         to_string(p.value));
  }
  return p.value;
}

std::vector<int> order_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    const std::int64_t k = parse_count(item);
    if (k < 1 || k > kMaxStatOrder) throw DomainError("orders must lie in 1..12, got " + item);
    out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<std::int64_t> count_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(text)) out.push_back(parse_count(item));
  return out;
}

std::string order_text(const std::vector<int>& orders) {
  std::string s;
  for (int k : orders) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

int resolve_threads(const Common& common) {
  if (common.threads) {
    if (*common.threads < 1) throw DomainError("--threads must be >= 1");
    return *common.threads;
  }
  if (const char* env = std::getenv("ERW_THREADS"); env != nullptr && *env != '\0') {
    const std::int64_t t = parse_count(env);
    if (t < 1 || t > 4096) throw DomainError("ERW_THREADS must be a positive thread count, got " + std::string(env));
    return static_cast<int>(t);
  }
  return 1;
}

// ---- subcommands ----------------------------------------------------------

struct ExactArgs {
  std::string alpha, beta = "1", n, orders = "1,2,3,4";
  std::int64_t max_bits = std::int64_t{1} << 18;
};

RunResult run_exact(const ExactArgs& a) {
  RunResult r;
  const ErwParams params(rational_flag("alpha", a.alpha, r), rational_flag("beta", a.beta, r));
  const std::int64_t n = parse_count(a.n);
  if (n < 1) throw DomainError("--n must be >= 1");
  const std::vector<int> orders = order_list(a.orders);
  if (a.max_bits < 64) throw DomainError("--max-bits must be >= 64");
  int top = 0;
  for (int k : orders) top = std::max(top, k);
  MomentOptions opts;
  opts.max_bits = static_cast<std::size_t>(a.max_bits);
  const MomentVector mv = exact_moments(params, n, top, opts);
  r.table.columns = {"n", "order", "value", "float"};
  for (int k : orders) {
    const Rational& v = mv.at(k);
    r.table.rows.push_back({num(std::to_string(n)), num(std::to_string(k)), str(to_string(v)),
                            num(format_number(to_long_double(v)))});
  }
  r.parameters = {{"alpha", to_string(params.alpha())}, {"beta", to_string(params.beta())},
                  {"n", n}, {"orders", order_text(orders)}, {"max_bits", a.max_bits}};
  return r;
}

struct DeviationArgs {
  std::string alpha, beta = "1", orders = "2,4", n_max = "10^6";
  int points_per_decade = kDefaultPointsPerDecade;
};

RunResult run_deviations(const DeviationArgs& a) {
  RunResult r;
  const ErwParams params(rational_flag("alpha", a.alpha, r), rational_flag("beta", a.beta, r));
  const std::int64_t n_max = parse_count(a.n_max);
  const std::vector<int> orders = order_list(a.orders);
  const bool critical = params.alpha() == Rational(1, 2);
  if (n_max < (critical ? 2 : 1)) throw DomainError("--n-max too small");
  const auto grid = geometric_grid(critical ? 2 : 1, n_max, a.points_per_decade);
  r.table.columns = {"n", "order", "value", "normalization"};
  for (int k : orders) {
    const DeviationSeries s = deviation_series(params, k, grid);
    const std::string norm(normalization_name(s.normalization));
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
      r.table.rows.push_back({num(std::to_string(s.grid[i])), num(std::to_string(k)),
                              num(format_number(s.values[i])), str(norm)});
    }
  }
  r.parameters = {{"alpha", to_string(params.alpha())}, {"beta", to_string(params.beta())},
                  {"orders", order_text(orders)}, {"n_max", n_max},
                  {"points_per_decade", a.points_per_decade}};
  return r;
}

struct RatesArgs {
  std::string alpha_grid, beta = "1", orders = "1,2,3,4,5,6", n_max = "10^6", window_lo, window_hi;
  bool predict_only = false;
};

RunResult run_rates(const RatesArgs& a, int threads) {
  RunResult r;
  CrossoverOptions opts;
  if (!a.alpha_grid.empty()) {
    opts.alphas.clear();
    for (const auto& item : split_list(a.alpha_grid)) opts.alphas.push_back(rational_flag("alpha-grid", item, r));
  }
  opts.orders = order_list(a.orders);
  opts.beta = rational_flag("beta", a.beta, r);
  opts.n_max = parse_count(a.n_max);
  opts.threads = threads;
  FitWindow w = default_window(opts.n_max);
  if (!a.window_lo.empty()) w.lo = parse_count(a.window_lo);
  if (!a.window_hi.empty()) w.hi = parse_count(a.window_hi);
  opts.window = w;
  if (opts.n_max < kRatesReferenceNmax) {
    r.warnings.push_back("n_max " + std::to_string(opts.n_max) +
                         " is below 10^6; finite-n bias in the fitted exponents is larger, widen any tolerance");
  }
  std::string alpha_text;
  for (const auto& x : opts.alphas) alpha_text += (alpha_text.empty() ? "" : ",") + to_string(x);
  r.parameters = {{"alpha_grid", alpha_text}, {"beta", to_string(opts.beta)}, {"orders", order_text(opts.orders)},
                  {"n_max", opts.n_max}, {"window_lo", w.lo}, {"window_hi", w.hi},
                  {"predict_only", a.predict_only}};

  if (a.predict_only) {
    r.table.columns = {"alpha", "order", "gamma_exponent", "coefficient", "decay_kind"};
    for (const auto& alpha : opts.alphas) {
      const ErwParams params(alpha, opts.beta);
      for (int k : opts.orders) {
        const RatePrediction p = predict_rate(params, k);
        r.table.rows.push_back({str(to_string(alpha)), num(std::to_string(k)), num(format_number(p.exponent)),
                                num(p.identically_zero ? "0" : format_number(p.coefficient)),
                                str(p.identically_zero ? "identically_zero" : std::string(decay_kind_name(p.decay)))});
      }
    }
    return r;
  }
  r.table.columns = {"alpha", "order", "gamma_hat", "gamma_predicted", "coefficient_hat",
                     "coefficient_predicted", "flags"};
  for (const auto& c : crossover_scan(opts)) {
    r.table.rows.push_back({str(to_string(c.alpha)), num(std::to_string(c.order)),
                            num(c.fit ? format_number(c.fit->exponent) : "nan"),
                            num(format_number(c.prediction.exponent)),
                            num(c.fit ? format_number(c.fit->coefficient) : "nan"),
                            num(c.prediction.identically_zero ? "0" : format_number(c.prediction.coefficient)),
                            str(c.flags)});
  }
  return r;
}

struct SimulateArgs {
  std::string alpha, beta = "0", n, replicas = "10^4", checkpoints, dynamics = "conditional",
                     replay_cap = "10^5";
  std::optional<std::uint64_t> seed;
  bool dump_terminal = false;
};

RunResult run_simulate(const SimulateArgs& a, int threads, bool has_output) {
  RunResult r;
  if (!a.seed) throw DomainError("--seed is required; simulations never draw entropy");
  SimConfig c;
  c.alpha = rational_flag("alpha", a.alpha, r);
  c.beta = rational_flag("beta", a.beta, r);
  c.horizon = parse_count(a.n);
  c.replicas = parse_count(a.replicas);
  c.seed = *a.seed;
  c.threads = threads;
  c.replay_cap = parse_count(a.replay_cap);
  if (!a.checkpoints.empty()) c.checkpoints = count_list(a.checkpoints);
  if (a.dynamics == "replay") {
    c.dynamics = Dynamics::kMemoryReplay;
  } else if (a.dynamics != "conditional") {
    throw DomainError("--dynamics must be conditional or replay, got " + a.dynamics);
  }
  if (a.dump_terminal && !has_output) throw DomainError("--dump-terminal needs --output");
  c.validate();

  std::vector<std::int64_t> terminal;
  const RunningStats stats = simulate(c, a.dump_terminal ? &terminal : nullptr);
  r.table.columns = {"n", "count"};
  for (int k = 1; k <= kMaxStatOrder; ++k) r.table.columns.push_back("m" + std::to_string(k));
  r.table.columns.push_back("ks");
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const std::int64_t n = stats.checkpoints()[i];
    const long double scale = std::sqrt(simulation_scale(c, n));
    std::vector<Cell> row{num(std::to_string(n)), num(std::to_string(stats.count(i)))};
    for (int k = 1; k <= kMaxStatOrder; ++k) row.push_back(num(format_number(stats.moment(i, k, scale))));
    row.push_back(num(format_number(stats.kolmogorov(i, scale))));
    r.table.rows.push_back(std::move(row));
  }
  if (a.dump_terminal) {
    std::vector<double> values(terminal.begin(), terminal.end());
    std::ostringstream bytes;
    write_float64_le(bytes, values);
    r.extra.emplace_back(".terminal.f64", bytes.str());
  }
  std::string cps;
  for (std::int64_t t : c.recording_times()) cps += (cps.empty() ? "" : ",") + std::to_string(t);
  r.seed = c.seed;
  r.parameters = {{"alpha", to_string(c.alpha)}, {"beta", to_string(c.beta)}, {"n", c.horizon},
                  {"replicas", c.replicas}, {"seed", c.seed}, {"dynamics", std::string(dynamics_name(c.dynamics))},
                  {"checkpoints", cps}, {"replay_cap", c.replay_cap}, {"dump_terminal", a.dump_terminal}};
  return r;
}

struct BoundsArgs {
  std::string alpha, beta = "1", n = "10,100,1000,10000";
};

RunResult run_bounds(const BoundsArgs& a) {
  RunResult r;
  const ErwParams params(rational_flag("alpha", a.alpha, r), rational_flag("beta", a.beta, r));
  const std::vector<std::int64_t> ns = count_list(a.n);
  r.table.columns = {"n", "berry_esseen_shape", "s2", "sigma2", "ratio_minus_one", "variance_asymptote"};
  for (std::int64_t n : ns) {
    if (n < 3) throw DomainError("bounds needs n >= 3, got " + std::to_string(n));
    const VarianceSums v = variance_sums(params, n);
    const long double nn = static_cast<long double>(n);
    r.table.rows.push_back({num(std::to_string(n)), num(format_number(berry_esseen_shape(params, nn))),
                            num(format_number(v.s2)), num(format_number(v.sigma2)),
                            num(format_number(std::sqrt(v.s2 / v.sigma2) - 1.0L)),
                            num(format_number(variance_asymptote(params, nn)))});
  }
  r.parameters = {{"alpha", to_string(params.alpha())}, {"beta", to_string(params.beta())}, {"n", a.n}};
  return r;
}

struct FirstReturnArgs {
  std::string alpha, beta = "0", horizons = "10^3,10^4,10^5", replicas = "10^4";
  std::optional<std::uint64_t> seed;
};

RunResult run_first_return(const FirstReturnArgs& a, int threads) {
  RunResult r;
  if (!a.seed) throw DomainError("--seed is required; simulations never draw entropy");
  std::vector<std::int64_t> horizons = count_list(a.horizons);
  std::sort(horizons.begin(), horizons.end());
  horizons.erase(std::unique(horizons.begin(), horizons.end()), horizons.end());
  SimConfig c;
  c.alpha = rational_flag("alpha", a.alpha, r);
  c.beta = rational_flag("beta", a.beta, r);
  c.horizon = horizons.back();
  c.replicas = parse_count(a.replicas);
  c.seed = *a.seed;
  c.threads = threads;
  if (horizons.front() < 1) throw DomainError("horizons must be >= 1");
  const auto samples = first_return_times(c);
  r.table.columns = {"horizon", "replicas", "censored_mean", "censored_fraction"};
  for (std::int64_t h : horizons) {
    r.table.rows.push_back({num(std::to_string(h)), num(std::to_string(c.replicas)),
                            num(format_number(censored_mean(samples, h))),
                            num(format_number(censored_fraction(samples, h)))});
  }
  std::string hs;
  for (std::int64_t h : horizons) hs += (hs.empty() ? "" : ",") + std::to_string(h);
  r.seed = c.seed;
  r.parameters = {{"alpha", to_string(c.alpha)}, {"beta", to_string(c.beta)}, {"horizons", hs},
                  {"replicas", c.replicas}, {"seed", c.seed}};
  return r;
}

// ---- output and manifests ---------------------------------------------------

std::vector<std::string> recorded_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--output" || a == "-o") {
      ++i;
      continue;
    }
    if (a.rfind("--output=", 0) == 0) continue;
    out.push_back(a);
  }
  return out;
}

void write_table(std::ostream& out, const Table& t, const std::string& format) {
  if (format == "json") {
    write_table_json(out, t);
  } else {
    write_table_csv(out, t);
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path);
}

void emit(const RunResult& r, const Common& common, const std::string& subcommand,
          const std::vector<std::string>& args, int threads, std::ostream& out, std::ostream& err) {
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  if (common.output.empty()) {
    write_table(out, r.table, common.format);
    return;
  }
  std::ostringstream body;
  write_table(body, r.table, common.format);
  write_file(common.output, body.str());
  Json outputs = Json::array({common.output});
  for (const auto& [suffix, bytes] : r.extra) {
    write_file(common.output + suffix, bytes);
    outputs.push_back(common.output + suffix);
  }
  Json m;
  m["tool"] = "erw";
  m["version"] = kVersion;
  m["subcommand"] = subcommand;
  m["args"] = recorded_args(args);
  m["format"] = common.format;
  m["threads"] = threads;
  m["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  m["parameters"] = r.parameters;
  m["outputs"] = outputs;
  m["warnings"] = r.warnings;
  write_file(common.output + ".manifest.json", m.dump(2) + "\n");
}

std::vector<std::string> manifest_args(const std::string& path, std::string& first_output) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read manifest " + path);
  Json m;
  try {
    m = Json::parse(f);
  } catch (const Json::exception& e) {
    throw DomainError("manifest " + path + " is not valid JSON: " + e.what());
  }
  if (!m.contains("args") || !m["args"].is_array()) throw DomainError("manifest " + path + " has no args array");
  std::vector<std::string> args = m["args"].get<std::vector<std::string>>();
  if (args.empty() || args.front() == "replay") throw DomainError("manifest " + path + " does not describe a run");
  if (m.contains("outputs") && m["outputs"].is_array() && !m["outputs"].empty()) {
    first_output = m["outputs"][0].get<std::string>();
  }
  return args;
}

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("-o,--output", common.output,
                  "Output file; a manifest <file>.manifest.json is written next to it (default: stdout)");
}

void add_threads(CLI::App* sub, Common& common) {
  sub->add_option("--threads", common.threads,
                  "Worker threads (count); falls back to ERW_THREADS, then 1. Output does not depend on it");
}

}  // namespace

std::int64_t parse_count(std::string_view text) {
  const std::string s(text);
  auto fail = [&]() -> std::int64_t { throw DomainError("expected a non-negative integer count, got '" + s + "'"); };
  if (s.empty()) return fail();
  auto plain = [&](std::string_view t) -> std::int64_t {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || v < 0) fail();
    return v;
  };
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    const std::int64_t base = plain(std::string_view(s).substr(0, caret));
    const std::int64_t exp = plain(std::string_view(s).substr(caret + 1));
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
      if (base != 0 && v > INT64_MAX / base) fail();
      v *= base;
    }
    return v;
  }
  if (s.find_first_of(".eE") != std::string::npos) {
    Rational q;
    try {
      q = parse_rational(s).value;
    } catch (const DomainError&) {
      return fail();
    }
    if (q.get_den() != 1 || q < 0 || !q.get_num().fits_slong_p()) return fail();
    return q.get_num().get_si();
  }
  return plain(s);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments, deviations, convergence rates and simulation of the elephant random walk", "erw"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;

  ExactArgs ex;
  CLI::App* exact = app.add_subcommand("exact", "Exact rational moments E[S_n^k]");
  exact->add_option("--alpha", ex.alpha, "Memory parameter in (-1,1); p/q or decimal")->required();
  exact->add_option("--beta", ex.beta, "First-step bias in [-1,1]; p/q or decimal")->capture_default_str();
  exact->add_option("--n", ex.n, "Time n (steps); accepts 1000, 10^3, 1e3")->required();
  exact->add_option("--orders", ex.orders, "Comma-separated moment orders in 1..12")->capture_default_str();
  exact->add_option("--max-bits", ex.max_bits, "Cap on the size of the exact state (bits); exceeding it exits 3")
      ->capture_default_str();
  add_common(exact, common);

  DeviationArgs dv;
  CLI::App* deviations = app.add_subcommand("deviations", "Normalised moment deviations on a geometric grid");
  deviations->add_option("--alpha", dv.alpha, "Memory parameter in (-1,1/2]; p/q or decimal")->required();
  deviations->add_option("--beta", dv.beta, "First-step bias in [-1,1]")->capture_default_str();
  deviations->add_option("--orders", dv.orders, "Comma-separated orders in 1..12")->capture_default_str();
  deviations->add_option("--n-max", dv.n_max, "Last time on the grid (steps)")->capture_default_str();
  deviations->add_option("--points-per-decade", dv.points_per_decade, "Grid density (points per factor 10 in n)")
      ->capture_default_str();
  add_common(deviations, common);

  RatesArgs rt;
  CLI::App* rates = app.add_subcommand("rates", "Fitted vs predicted decay exponents over an (alpha, order) grid");
  rates->add_option("--alpha-grid", rt.alpha_grid,
                    "Comma-separated alphas in (-1,1/2] (default: -9/10,-3/4,-1/2,-1/4,-1/10,0,1/10,1/4,2/5)");
  rates->add_option("--orders", rt.orders, "Comma-separated orders in 1..12")->capture_default_str();
  rates->add_option("--beta", rt.beta, "First-step bias for odd orders")->capture_default_str();
  rates->add_option("--n-max", rt.n_max, "Last time of each deviation series (steps)")->capture_default_str();
  rates->add_option("--window-lo", rt.window_lo, "Fit window start (steps; default n_max/100)");
  rates->add_option("--window-hi", rt.window_hi, "Fit window end (steps; default n_max)");
  rates->add_flag("--predict-only", rt.predict_only, "Emit the closed-form predictions without fitting");
  add_common(rates, common);
  add_threads(rates, common);

  SimulateArgs sm;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo moments and Kolmogorov distance of S_n");
  sim->add_option("--alpha", sm.alpha, "Memory parameter in [-1,1]")->required();
  sim->add_option("--beta", sm.beta, "First-step bias in [-1,1]")->capture_default_str();
  sim->add_option("--n", sm.n, "Horizon (steps)")->required();
  sim->add_option("--replicas", sm.replicas, "Independent walks (count)")->capture_default_str();
  sim->add_option("--seed", sm.seed, "Master seed (64-bit integer); required");
  sim->add_option("--checkpoints", sm.checkpoints, "Extra comma-separated recording times (steps)");
  sim->add_option("--dynamics", sm.dynamics, "conditional (O(1) per step) or replay (stores the path)")
      ->capture_default_str();
  sim->add_option("--replay-cap", sm.replay_cap, "Largest horizon accepted by replay (steps); above it exits 3")
      ->capture_default_str();
  sim->add_flag("--dump-terminal", sm.dump_terminal,
                "Also write S_n of every replica as little-endian float64 to <output>.terminal.f64");
  add_common(sim, common);
  add_threads(sim, common);

  BoundsArgs bd;
  CLI::App* bounds = app.add_subcommand("bounds", "Berry-Esseen bound shapes and variance normalisation sums");
  bounds->add_option("--alpha", bd.alpha, "Memory parameter in (-1,1/2]")->required();
  bounds->add_option("--beta", bd.beta, "First-step bias in [-1,1]")->capture_default_str();
  bounds->add_option("--n", bd.n, "Comma-separated times n >= 3 (steps)")->capture_default_str();
  add_common(bounds, common);

  FirstReturnArgs fr;
  CLI::App* first = app.add_subcommand("first-return", "Censored means of the first return time to 0");
  first->add_option("--alpha", fr.alpha, "Memory parameter in [-1,1]")->required();
  first->add_option("--beta", fr.beta, "First-step bias in [-1,1]")->capture_default_str();
  first->add_option("--horizons", fr.horizons, "Comma-separated censoring horizons (steps)")->capture_default_str();
  first->add_option("--replicas", fr.replicas, "Independent walks (count)")->capture_default_str();
  first->add_option("--seed", fr.seed, "Master seed (64-bit integer); required");
  add_common(first, common);
  add_threads(first, common);

  std::string manifest_path;
  std::string replay_output;
  CLI::App* replay = app.add_subcommand("replay", "Rerun the command recorded in a manifest");
  replay->add_option("--manifest", manifest_path, "Manifest written by an earlier run")->required();
  replay->add_option("-o,--output", replay_output, "Output file (default: the recorded output path)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (replay->parsed()) {
      std::string recorded_output;
      std::vector<std::string> rerun = manifest_args(manifest_path, recorded_output);
      const std::string target = replay_output.empty() ? recorded_output : replay_output;
      if (!target.empty()) {
        rerun.push_back("--output");
        rerun.push_back(target);
      }
      return run_cli(rerun, out, err);
    }
    const bool has_output = !common.output.empty();
    RunResult result;
    std::string name;
    int threads = 1;
    if (exact->parsed()) {
      name = "exact";
      result = run_exact(ex);
    } else if (deviations->parsed()) {
      name = "deviations";
      result = run_deviations(dv);
    } else if (rates->parsed()) {
      name = "rates";
      threads = resolve_threads(common);
      result = run_rates(rt, threads);
    } else if (sim->parsed()) {
      name = "simulate";
      threads = resolve_threads(common);
      result = run_simulate(sm, threads, has_output);
    } else if (bounds->parsed()) {
      name = "bounds";
      result = run_bounds(bd);
    } else {
      name = "first-return";
      threads = resolve_threads(common);
      result = run_first_return(fr, threads);
    }
    emit(result, common, name, args, threads, out, err);
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace erw::cli
