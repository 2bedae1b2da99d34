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

#include "steerlab/witnesses.hpp"

#include <cmath>

#include "crossing.hpp"
#include "steerlab/error.hpp"

namespace steerlab {

namespace {

struct Roles {
  Quadrature xs, ps, xo, po;  // steered and steering (other) quadratures
};

Roles roles(Mode steered) {
  const Mode o = other(steered);
  return {{steered, QuadratureKind::X}, {steered, QuadratureKind::P},
          {o, QuadratureKind::X},       {o, QuadratureKind::P}};
}

void require_positive_variance(double v) {
  if (!(v > 0.0)) throw DegenerateState("steering-mode variance is not positive");
}

}  // namespace

Gains optimal_gains(const GaussianTwoModeState& state, Mode steered) {
  const Roles q = roles(steered);
  const double vxo = state.cov(q.xo, q.xo);
  const double vpo = state.cov(q.po, q.po);
  require_positive_variance(vxo);
  require_positive_variance(vpo);
  return {state.cov(q.xs, q.xo) / vxo, -state.cov(q.ps, q.po) / vpo};
}

double epr_product(const GaussianTwoModeState& state, Mode steered, const Gains& gains) {
  if (!std::isfinite(gains.g_x) || !std::isfinite(gains.g_p)) {
    throw InvalidArgument("gains must be finite");
  }
  const Roles q = roles(steered);
  const double gx = gains.g_x;
  const double gp = gains.g_p;
  const double var_x = state.cov(q.xs, q.xs) - 2.0 * gx * state.cov(q.xs, q.xo) +
                       gx * gx * state.cov(q.xo, q.xo);
  const double var_p = state.cov(q.ps, q.ps) + 2.0 * gp * state.cov(q.ps, q.po) +
                       gp * gp * state.cov(q.po, q.po);
  return std::sqrt(var_x * var_p);
}

EprResult epr_optimized(const GaussianTwoModeState& state, Mode steered) {
  const Roles q = roles(steered);
  EprResult out;
  out.gains = optimal_gains(state, steered);

  const double cx = state.cov(q.xs, q.xo);
  const double cp = state.cov(q.ps, q.po);
  // Conditional variances, carried as excess over vacuum.
  const double ex = state.excess(q.xs, q.xs) - cx * cx / state.cov(q.xo, q.xo);
  const double ep = state.excess(q.ps, q.ps) - cp * cp / state.cov(q.po, q.po);

  out.var_x = 1.0 + ex;
  out.var_p = 1.0 + ep;
  out.value = std::sqrt(out.var_x * out.var_p);
  out.excess = detail::sqrt_product_minus_one(ex, ep);
  return out;
}

double epr_thermal_closed_form(SqueezeParam r, const ReservoirParams& res, double t,
                               Mode steered) {
  res.validate();
  if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("time must be finite and >= 0");
  const ReservoirParams p = steered == Mode::A ? res : res.swapped();

  const double c = std::cosh(2.0 * r.value());
  const double ea = std::exp(-2.0 * p.gamma_a * t);
  const double eb = std::exp(-2.0 * p.gamma_b * t);
  const double ua = -std::expm1(-2.0 * p.gamma_a * t);
  const double ub = -std::expm1(-2.0 * p.gamma_b * t);
  const double na = 1.0 + 2.0 * p.n_a;
  const double nb = 1.0 + 2.0 * p.n_b;

  const double numerator = c * (ea * ub * nb + eb * ua * na) + ea * eb + na * nb * ub * ua;
  const double denominator = eb * c + ub * nb;
  return numerator / denominator;
}

std::optional<double> sudden_death_time(SqueezeParam r, const ReservoirParams& res,
                                        Mode steered) {
  res.validate();
  const GaussianTwoModeState initial = two_mode_squeezed(r);
  auto margin = [&](double t) { return epr_optimized(evolve(initial, res, t), steered).excess; };
  if (margin(0.0) >= 0.0) {
    throw NotApplicable("no EPR steering at t = 0, so no sudden-death time");
  }
  const auto horizon = detail::relaxation_horizon(res.gamma_a, res.gamma_b);
  if (!horizon) return std::nullopt;
  return detail::first_upcrossing(margin, *horizon);
}

namespace {

double ent_excess_at(const GaussianTwoModeState& s, double g) {
  const double norm = 1.0 + g * g;
  const double ax = s.excess(kXA, kXA) - 2.0 * g * s.cov(kXA, kXB) + g * g * s.excess(kXB, kXB);
  const double ap = s.excess(kPA, kPA) + 2.0 * g * s.cov(kPA, kPB) + g * g * s.excess(kPB, kPB);
  return detail::sqrt_product_minus_one(ax / norm, ap / norm);
}

}  // namespace

double ent_at_gain(const GaussianTwoModeState& state, double g) {
  if (!std::isfinite(g)) throw InvalidArgument("gain must be finite");
  return 1.0 + ent_excess_at(state, g);
}

EntResult ent_parameter(const GaussianTwoModeState& state) {
  const double vxa = state.cov(kXA, kXA);
  const double vxb = state.cov(kXB, kXB);
  const double cab = state.cov(kXA, kXB);

  EntResult out;
  if (cab != 0.0) {
    // Minimizing root of -c + g d + g^2 c = 0 with d = <X_B^2> - <X_A^2>.
    // The conjugate form avoids cancellation when d > 0.
    const double d = vxb - vxa;
    const double s = std::hypot(d, 2.0 * cab);
    out.g = d <= 0.0 ? (s - d) / (2.0 * cab) : 2.0 * cab / (d + s);
  }
  out.excess = ent_excess_at(state, out.g);
  out.value = 1.0 + out.excess;
  return out;
}

std::optional<double> ent_death_time(SqueezeParam r, const ReservoirParams& res) {
  res.validate();
  const GaussianTwoModeState initial = two_mode_squeezed(r);
  auto margin = [&](double t) { return ent_parameter(evolve(initial, res, t)).excess; };
  if (margin(0.0) >= 0.0) throw NotApplicable("state is not entangled at t = 0");
  const auto horizon = detail::relaxation_horizon(res.gamma_a, res.gamma_b);
  if (!horizon) return std::nullopt;
  return detail::first_upcrossing(margin, *horizon);
}

SteeringReport steering_report(const GaussianTwoModeState& state, double t) {
  const EprResult ab = epr_optimized(state, Mode::A);
  const EprResult ba = epr_optimized(state, Mode::B);
  const EntResult ent = ent_parameter(state);
  return {ab.value, ba.value, ab.gains, ba.gains, ent.value, ent.g, t};
}

}  // namespace steerlab
