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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "erw/asymptotics.h"
#include "erw/deviations.h"
#include "erw/errors.h"
#include "erw/moments.h"
#include "erw/rate_analysis.h"
#include "erw/simulator.h"
#include "erw/version.h"

namespace py = pybind11;

namespace erw {
namespace {

Rational rat(const std::string& text) { return parse_rational(text).value; }

ErwParams params(const std::string& alpha, const std::string& beta) { return ErwParams(rat(alpha), rat(beta)); }

py::dict prediction_dict(const RatePrediction& p) {
  py::dict d;
  d["alpha"] = to_string(p.alpha);
  d["order"] = p.order;
  d["regime"] = std::string(regime_name(p.regime));
  d["coefficient"] = static_cast<double>(p.coefficient);
  d["decay_kind"] = std::string(decay_kind_name(p.decay));
  d["exponent"] = static_cast<double>(p.exponent);
  d["identically_zero"] = p.identically_zero;
  return d;
}

}  // namespace
}  // namespace erw

PYBIND11_MODULE(_core, m) {
  using namespace erw;
  m.doc() = "Compiled core of erw_moments. Rationals cross the boundary as \"p/q\" strings.";
  m.attr("__version__") = kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.def(
      "exact_moments",
      [](const std::string& alpha, const std::string& beta, std::int64_t n, int max_order) {
        const MomentVector mv = exact_moments(params(alpha, beta), n, max_order);
        std::map<int, std::string> out;
        for (const auto& [k, v] : mv.values()) out[k] = to_string(v);
        return out;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("max_order") = 4,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "brute_force_moment",
      [](const std::string& alpha, const std::string& beta, int n, int k) {
        return to_string(brute_force_moment(params(alpha, beta), n, k));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("k"));

  m.def(
      "second_moment_closed_form",
      [](const std::string& alpha, std::int64_t n) {
        return static_cast<double>(second_moment_closed_form(params(alpha, "0"), n));
      },
      py::arg("alpha"), py::arg("n"));

  m.def(
      "deviation_series",
      [](const std::string& alpha, const std::string& beta, int order, std::int64_t n_max, int points_per_decade) {
        const ErwParams p = params(alpha, beta);
        const bool critical = p.alpha() == Rational(1, 2);
        const DeviationSeries s = [&] {
          py::gil_scoped_release release;
          return deviation_series(p, order, geometric_grid(critical ? 2 : 1, n_max, points_per_decade));
        }();
        std::vector<double> values(s.values.begin(), s.values.end());
        return py::make_tuple(s.grid, values, std::string(normalization_name(s.normalization)));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("order"), py::arg("n_max") = 1000000,
      py::arg("points_per_decade") = kDefaultPointsPerDecade);

  m.def(
      "predict_rate",
      [](const std::string& alpha, const std::string& beta, int k) {
        return prediction_dict(predict_rate(params(alpha, beta), k));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("k"));

  m.def(
      "crossover_scan",
      [](std::vector<std::string> alphas, std::vector<int> orders, std::int64_t n_max, int threads) {
        CrossoverOptions o;
        if (!alphas.empty()) {
          o.alphas.clear();
          for (const auto& a : alphas) o.alphas.push_back(rat(a));
        }
        if (!orders.empty()) o.orders = orders;
        o.n_max = n_max;
        o.threads = threads;
        std::vector<CrossoverCell> cells;
        {
          py::gil_scoped_release release;
          cells = crossover_scan(o);
        }
        py::list out;
        for (const auto& c : cells) {
          py::dict d;
          d["alpha"] = to_string(c.alpha);
          d["order"] = c.order;
          d["gamma_predicted"] = static_cast<double>(c.prediction.exponent);
          d["coefficient_predicted"] = static_cast<double>(c.prediction.coefficient);
          d["gamma_hat"] = c.fit ? py::object(py::float_(static_cast<double>(c.fit->exponent))) : py::none();
          d["coefficient_hat"] = c.fit ? py::object(py::float_(static_cast<double>(c.fit->coefficient))) : py::none();
          d["flags"] = c.flags;
          out.append(d);
        }
        return out;
      },
      py::arg("alphas") = std::vector<std::string>{}, py::arg("orders") = std::vector<int>{},
      py::arg("n_max") = 1000000, py::arg("threads") = 1);

  m.def(
      "simulate",
      [](const std::string& alpha, const std::string& beta, std::int64_t n, std::int64_t replicas, std::uint64_t seed,
         const std::string& dynamics, std::vector<std::int64_t> checkpoints, int threads) {
        SimConfig c;
        c.alpha = rat(alpha);
        c.beta = rat(beta);
        c.horizon = n;
        c.replicas = replicas;
        c.seed = seed;
        c.checkpoints = std::move(checkpoints);
        c.threads = threads;
        if (dynamics == "replay") {
          c.dynamics = Dynamics::kMemoryReplay;
        } else if (dynamics != "conditional") {
          throw DomainError("dynamics must be conditional or replay");
        }
        RunningStats s;
        {
          py::gil_scoped_release release;
          s = simulate(c);
        }
        py::list rows;
        for (std::size_t i = 0; i < s.size(); ++i) {
          const std::int64_t t = s.checkpoints()[i];
          const long double scale = std::sqrt(simulation_scale(c, t));
          py::dict d;
          d["n"] = t;
          d["count"] = s.count(i);
          std::vector<double> moments;
          for (int k = 1; k <= kMaxStatOrder; ++k) moments.push_back(static_cast<double>(s.moment(i, k, scale)));
          d["moments"] = moments;
          d["ks"] = static_cast<double>(s.kolmogorov(i, scale));
          rows.append(d);
        }
        return rows;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("replicas"), py::arg("seed"),
      py::arg("dynamics") = "conditional", py::arg("checkpoints") = std::vector<std::int64_t>{},
      py::arg("threads") = 1);

  m.def(
      "first_return_censored_means",
      [](const std::string& alpha, const std::string& beta, std::vector<std::int64_t> horizons, std::int64_t replicas,
         std::uint64_t seed, int threads) {
        if (horizons.empty()) throw DomainError("horizons must be nonempty");
        SimConfig c;
        c.alpha = rat(alpha);
        c.beta = rat(beta);
        c.horizon = *std::max_element(horizons.begin(), horizons.end());
        c.replicas = replicas;
        c.seed = seed;
        c.threads = threads;
        std::vector<FirstReturnSample> samples;
        {
          py::gil_scoped_release release;
          samples = first_return_times(c);
        }
        std::vector<double> out;
        for (std::int64_t h : horizons) out.push_back(static_cast<double>(censored_mean(samples, h)));
        return out;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("horizons"), py::arg("replicas"), py::arg("seed"),
      py::arg("threads") = 1);

  m.def(
      "berry_esseen_shape",
      [](const std::string& alpha, double n) {
        return static_cast<double>(berry_esseen_shape(params(alpha, "0"), n));
      },
      py::arg("alpha"), py::arg("n"));

  m.def(
      "variance_sums",
      [](const std::string& alpha, std::int64_t n) {
        const VarianceSums v = variance_sums(params(alpha, "0"), n);
        return py::make_tuple(static_cast<double>(v.s2), static_cast<double>(v.sigma2));
      },
      py::arg("alpha"), py::arg("n"));
}
