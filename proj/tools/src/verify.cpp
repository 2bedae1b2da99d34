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

#include "steerlab/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "steerlab/cat_state.hpp"
#include "steerlab/parallel.hpp"
#include "steerlab/quadrature.hpp"
#include "steerlab/thermal_channel.hpp"
#include "steerlab/witnesses.hpp"

namespace steerlab::cli {

namespace {

VerifyCheck check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation, tolerance, deviation <= tolerance};
}

std::string label(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : fields) {
    s << (first ? "" : " ") << k << '=' << v;
    first = false;
  }
  return s.str();
}

void gaussian_checks(const McConfig& mc, std::vector<VerifyCheck>& out) {
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.0})
    for (double ratio : {0.0, 1.0})
      for (double na : {0.0, 1.0, 5.0, 10.0})
        for (double nb : {0.0, 1.0, 5.0, 10.0})
          for (double t : {0.1, 0.5, 1.5}) {
            const ReservoirParams res{ratio, 1.0, na, nb};
            const auto s = evolve(two_mode_squeezed(SqueezeParam(r)), res, t);
            for (Mode m : {Mode::A, Mode::B}) {
              worst = std::max(worst, std::abs(epr_thermal_closed_form(SqueezeParam(r), res, t, m) -
                                               epr_optimized(s, m).value));
            }
          }
  out.push_back(check("closed form vs covariance pipeline (384 points)", worst, 1e-12));

  {
    const ReservoirParams res{0.5, 1.0, 1.0, 5.0};
    const auto s0 = two_mode_squeezed(SqueezeParam(1.0));
    const auto ode = integrate_channel(s0, res, 1.0, 4000);
    const auto exact = evolve(s0, res, 1.0);
    const double d = (ode.covariance() - exact.covariance()).cwiseAbs().maxCoeff();
    out.push_back(check("channel ODE vs closed-form map", d, 1e-9));
  }

  {
    double d = 0.0;
    for (double r : {0.5, 1.0, 2.0}) {
      const auto t = sudden_death_time(SqueezeParam(r), {0.0, 1.0, 0.0, 0.0}, Mode::A);
      d = std::max(d, t ? std::abs(*t - std::numbers::ln2 / 2) : INFINITY);
    }
    out.push_back(check("EPR_A|B sudden death at ln2/2", d, 1e-9));
  }

  struct Point {
    double r;
    ReservoirParams res;
    double t;
    Mode mode;
  };
  const Point points[] = {
      {0.0, {0.0, 1.0, 0.0, 0.0}, 0.0, Mode::A},  {1.0, {0.0, 1.0, 0.0, 0.0}, 0.0, Mode::A},
      {1.0, {0.0, 1.0, 0.0, 1.0}, 0.2, Mode::A},  {1.0, {0.0, 1.0, 0.0, 1.0}, 0.2, Mode::B},
      {1.5, {1.0, 1.0, 5.0, 5.0}, 0.05, Mode::A}, {0.5, {0.3, 1.0, 1.0, 0.0}, 0.4, Mode::B},
  };
  for (std::size_t i = 0; i < std::size(points); ++i) {
    const Point& p = points[i];
    const auto s = evolve(two_mode_squeezed(SqueezeParam(p.r)), p.res, p.t);
    McConfig cfg = mc;
    cfg.seed = mc.seed + i;
    const McEstimate e = mc_gaussian_witness(s, p.mode, cfg);
    const double exact = epr_thermal_closed_form(SqueezeParam(p.r), p.res, p.t, p.mode);
    out.push_back(check(std::string("MC EPR_") + (p.mode == Mode::A ? "A|B " : "B|A ") +
                            label({{"r", p.r},
                                   {"ga", p.res.gamma_a},
                                   {"na", p.res.n_a},
                                   {"nb", p.res.n_b},
                                   {"t'", p.t}}),
                        std::abs(e.value - exact), 3.0 * e.std_error));
  }
}

void cat_checks(const FockConfig& fock, std::vector<VerifyCheck>& out) {
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    double v = 0.0;
    for (int s : {+1, -1}) {
      v += 0.5 * quadrature_variance([&](double p) { return cond_dist_p(alpha, p, s); },
                                     cat_support(alpha), 20'001);
    }
    out.push_back(check("quadrature Var(P|sx) " + label({{"alpha", alpha}}),
                        std::abs(v - cat_var_p_cond({alpha, 1.0, 0.0}, 0.0)), 1e-6));
  }

  struct Case {
    double alpha, n;
  };
  const Case cases[] = {{0.5, 0.0}, {0.5, 1.0}, {1.0, 0.0}, {1.0, 1.0}, {1.5, 0.0}, {1.5, 1.0}};
  const double times[] = {0.1, 0.5, 1.0};
  FockConfig cfg = fock;
  cfg.t_max = std::max(cfg.t_max, times[2]);
  std::vector<LindbladRun> runs(std::size(cases));
  parallel_for(std::size(cases), [&](std::size_t i) {
    runs[i] = lindblad_cat_run({cases[i].alpha, 1.0, cases[i].n}, cfg, times);
  });
  double trace = 0.0, herm = 0.0, spin = 0.0;
  for (std::size_t i = 0; i < std::size(cases); ++i) {
    const CatParams params{cases[i].alpha, 1.0, cases[i].n};
    double d = 0.0;
    for (std::size_t k = 0; k < std::size(times); ++k) {
      const auto& m = runs[i].moments[k];
      d = std::max({d, std::abs(m.var_x_given_z - cat_var_x_cond(params, times[k])),
                    std::abs(m.var_p_given_x - cat_var_p_cond(params, times[k]))});
    }
    out.push_back(check("Lindblad conditional variances " +
                            label({{"alpha", params.alpha}, {"n", params.n}}),
                        d, 1e-3));
    trace = std::max(trace, runs[i].diagnostics.max_trace_drift);
    herm = std::max(herm, runs[i].diagnostics.max_hermiticity_error);
    spin = std::max(spin, runs[i].diagnostics.max_sigma_z_drift);
  }
  out.push_back(check("Lindblad trace drift", trace, 1e-8));
  out.push_back(check("Lindblad hermiticity", herm, 1e-10));
  out.push_back(check("Lindblad sigma_z drift", spin, 1e-10));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verify(Scope scope, const McConfig& mc, const FockConfig& fock) {
  const bool gaussian = scope != Scope::Cat;
  const bool cat = scope != Scope::Gaussian;
  if (gaussian) mc.validate();
  if (cat) fock.validate(1.5);

  VerifyReport report;
  if (gaussian) gaussian_checks(mc, report.checks);
  if (cat) cat_checks(fock, report.checks);
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  std::size_t width = 5;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  const auto flags = out.flags();
  const auto precision = out.precision(3);
  out << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  "
      << std::setw(12) << "deviation" << "tolerance\n";
  for (const auto& c : report.checks) {
    out << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
        << (c.passed ? "PASS    " : "FAIL    ") << std::setw(12) << std::scientific << c.deviation
        << c.tolerance << std::defaultfloat << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  out << report.checks.size() - failed << '/' << report.checks.size() << " checks passed\n";
  out.flags(flags);
  out.precision(precision);
}

}  // namespace steerlab::cli
