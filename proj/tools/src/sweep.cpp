// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "steerlab/cli/sweep.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "steerlab/cat_state.hpp"
#include "steerlab/parallel.hpp"
#include "steerlab/thermal_channel.hpp"
#include "steerlab/witnesses.hpp"

namespace steerlab::cli {

namespace {

std::vector<TwoModeCurve> r_curves(double ratio, std::initializer_list<double> rs) {
  std::vector<TwoModeCurve> out;
  for (double r : rs) out.push_back({r, ratio, 0.0, 0.0});
  return out;
}

}  // namespace

void SweepSpec::validate() const {
  if (steps < 2) throw UsageError("--steps must be >= 2");
  if (!std::isfinite(t_prime_max) || !(t_prime_max > 0.0)) {
    throw UsageError("--t-prime-max must be > 0");
  }
  if (scenario == Scenario::TwoMode ? two_mode.empty() : cat.empty()) {
    throw UsageError("sweep has no curves");
  }
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig2-left", "fig2-right", "fig3",      "fig4-left",
                                              "fig4-right", "fig5-left", "fig5-right", "fig8"};
  return names;
}

SweepSpec preset_spec(std::string_view name) {
  SweepSpec spec;
  spec.preset = std::string(name);
  auto& c = spec.two_mode;
  if (name == "fig2-left") {
    c = r_curves(0.0, {0.5, 1.0, 2.0});
  } else if (name == "fig2-right") {
    c = r_curves(1.0, {0.5, 1.0, 2.0});
  } else if (name == "fig3") {
    for (double n : {1.0, 5.0, 10.0}) c.push_back({1.0, 0.0, 0.0, n});
  } else if (name == "fig4-left") {
    for (double r : {1.0, 2.0})
      for (double n : {1.0, 5.0, 10.0}) c.push_back({r, 1.0, n, n});
  } else if (name == "fig4-right") {
    for (double n : {1.0, 5.0, 10.0}) c.push_back({1.0, 1.0, n, 0.0});
  } else if (name == "fig5-left") {
    c = r_curves(1.0, {0.5, 1.0, 2.0});
    for (const auto& x : r_curves(0.0, {0.5, 1.0, 2.0})) c.push_back(x);
  } else if (name == "fig5-right") {
    for (double n : {1.0, 5.0, 10.0}) c.push_back({1.0, 1.0, n, n});
    for (double n : {1.0, 5.0, 10.0}) c.push_back({1.0, 0.0, 0.0, n});
  } else if (name == "fig8") {
    spec.scenario = Scenario::Cat;
    for (double alpha : {0.5, 1.0, 1.5})
      for (double n : {0.0, 1.0}) spec.cat.push_back({alpha, n});
  } else {
    std::string known;
    for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
    throw UsageError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
  }
  return spec;
}

std::vector<double> time_grid(double t_prime_max, int steps) {
  std::vector<double> t(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) t[k] = k == steps - 1 ? t_prime_max : k * t_prime_max / (steps - 1);
  return t;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> grid = time_grid(spec.t_prime_max, spec.steps);
  SweepResult result;
  result.scenario = spec.scenario;

  if (spec.scenario == Scenario::TwoMode) {
    result.two_mode.resize(spec.two_mode.size());
    parallel_for(spec.two_mode.size(), [&](std::size_t i) {
      const TwoModeCurve& c = spec.two_mode[i];
      const ReservoirParams res{c.gamma_ratio, 1.0, c.n_a, c.n_b};
      const GaussianTwoModeState initial = two_mode_squeezed(SqueezeParam(c.r));
      auto& rows = result.two_mode[i];
      rows.reserve(grid.size());
      for (double t : grid) {
        const SteeringReport rep = steering_report(evolve(initial, res, t), t);
        rows.push_back({t, c.r, c.gamma_ratio, c.n_a, c.n_b, rep.epr_a_given_b, rep.epr_b_given_a,
                        rep.ent, rep.gains_ab.g_x, rep.gains_ab.g_p, rep.g_ent});
      }
    });
  } else {
    result.cat.resize(spec.cat.size());
    parallel_for(spec.cat.size(), [&](std::size_t i) {
      const CatParams params{spec.cat[i].alpha, 1.0, spec.cat[i].n};
      auto& rows = result.cat[i];
      rows.reserve(grid.size());
      for (double t : grid) {
        rows.push_back({t, params.alpha, params.n, cat_var_x_cond(params, t),
                        cat_var_p_cond(params, t), cat_steering(params, t)});
      }
    });
  }
  return result;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  const auto old_precision = out.precision(17);
  if (result.scenario == Scenario::TwoMode) {
    out << kTwoModeHeader << '\n';
    for (const auto& curve : result.two_mode) {
      for (const auto& r : curve) {
        out << r.t_prime << ',' << r.r << ',' << r.gamma_ratio << ',' << r.n_a << ',' << r.n_b << ','
            << r.epr_ab << ',' << r.epr_ba << ',' << r.ent << ',' << r.g_x << ',' << r.g_p << ','
            << r.g_ent << '\n';
      }
    }
  } else {
    out << kCatHeader << '\n';
    for (const auto& curve : result.cat) {
      for (const auto& r : curve) {
        out << r.t_prime << ',' << r.alpha << ',' << r.n << ',' << r.var_x_cond << ','
            << r.var_p_cond << ',' << r.epr << '\n';
      }
    }
  }
  out.precision(old_precision);
}

void write_csv_file(const SweepResult& result, const std::string& path) {
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write_csv(result, file);
  file.flush();
  if (!file) throw UsageError("failed writing '" + path + "'");
}

}  // namespace steerlab::cli
