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

#include "steerlab/cat_state.hpp"

#include <cmath>
#include <string>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

constexpr double kQuadratureScale = 2.0;  // X = x when c = 2

void require_outcome(int outcome) {
  if (outcome != 1 && outcome != -1) {
    throw InvalidArgument("spin outcome must be +1 or -1, got " + std::to_string(outcome));
  }
}

void require_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("time must be finite and >= 0");
}

void require_amplitude(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw InvalidArgument("cat amplitude must be finite and >= 0");
  }
}

struct Decay {
  double amplitude;  // e^{-gamma t}
  double energy;     // e^{-2 gamma t}
  double noise;      // 2n (1 - e^{-2 gamma t})
};

Decay decay(double gamma, double n, double t) {
  return {std::exp(-gamma * t), std::exp(-2.0 * gamma * t),
          -2.0 * n * std::expm1(-2.0 * gamma * t)};
}

}  // namespace

void CatParams::validate() const {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw InvalidArgument("cat amplitude alpha must be finite and > 0");
  }
  if (!std::isfinite(gamma) || gamma < 0.0 || !std::isfinite(n) || n < 0.0) {
    throw InvalidArgument("bath rate and occupation must be finite and >= 0");
  }
}

double cond_dist_x_scaled(double alpha, double x, int outcome, double c) {
  require_outcome(outcome);
  require_amplitude(alpha);
  const double sign = static_cast<double>(outcome);
  const double exponent = -2.0 * x * x / (c * c) - 2.0 * alpha * alpha - sign * 4.0 * x * alpha / c;
  return std::sqrt(2.0 / std::numbers::pi) / c * std::exp(exponent);
}

double cond_dist_p_scaled(double alpha, double p, int outcome, double c) {
  require_outcome(outcome);
  require_amplitude(alpha);
  const double sign = static_cast<double>(outcome);
  const double envelope = std::sqrt(2.0 / std::numbers::pi) / c * std::exp(-2.0 * p * p / (c * c));
  return envelope * (1.0 + sign * std::sin(4.0 * p * alpha / c));
}

double cond_dist_x(double alpha, double x, int outcome) {
  return cond_dist_x_scaled(alpha, x, outcome, kQuadratureScale);
}

double cond_dist_p(double alpha, double p, int outcome) {
  return cond_dist_p_scaled(alpha, p, outcome, kQuadratureScale);
}

JointMoments joint_moments(const CatParams& params, double t) {
  params.validate();
  require_time(t);
  const Decay d = decay(params.gamma, params.n, t);
  const double a = params.alpha;

  JointMoments j;
  j.t = t;
  // sigma_z = +1 pairs with |-alpha>, so <X sigma_z> is negative.
  j.x_sz = -2.0 * a * d.amplitude;
  j.x2 = 1.0 + d.noise + 4.0 * a * a * d.energy;
  // sigma_x = +1 selects (|-alpha> + i|alpha>)/sqrt(2), whose <P> is
  // +2 alpha e^{-2 alpha^2}.
  j.p_sx = 2.0 * a * d.amplitude * std::exp(-2.0 * a * a);
  j.p2 = 1.0 + d.noise;
  return j;
}

ConditionalMoments conditional_from_joint(const JointMoments& j) {
  ConditionalMoments m;
  m.t = j.t;
  for (int outcome : {1, -1}) {
    const std::size_t i = outcome_index(outcome);
    const double s = static_cast<double>(outcome);
    m.mean_x_given_z[i] = s * j.x_sz + j.x;
    m.second_x_given_z[i] = s * j.x2_sz + j.x2;
    m.mean_p_given_x[i] = s * j.p_sx + j.p;
    m.second_p_given_x[i] = s * j.p2_sx + j.p2;
  }
  m.var_x_given_z = 0.0;
  m.var_p_given_x = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    m.var_x_given_z += m.prob_z[i] * (m.second_x_given_z[i] - m.mean_x_given_z[i] * m.mean_x_given_z[i]);
    m.var_p_given_x += m.prob_x[i] * (m.second_p_given_x[i] - m.mean_p_given_x[i] * m.mean_p_given_x[i]);
  }
  return m;
}

ConditionalMoments conditional_moments(const CatParams& params, double t) {
  return conditional_from_joint(joint_moments(params, t));
}

double cat_var_x_cond(const CatParams& params, double t) {
  params.validate();
  require_time(t);
  return 1.0 + decay(params.gamma, params.n, t).noise;
}

double cat_var_p_cond(const CatParams& params, double t) {
  params.validate();
  require_time(t);
  return single_mode_cat_var_p(params.alpha, params.gamma, params.n, t);
}

double cat_steering(const CatParams& params, double t) {
  return cat_var_x_cond(params, t) * cat_var_p_cond(params, t);
}

double single_mode_cat_var_p(double alpha, double gamma, double n, double t) {
  require_amplitude(alpha);
  require_time(t);
  if (!std::isfinite(gamma) || gamma < 0.0 || !std::isfinite(n) || n < 0.0) {
    throw InvalidArgument("bath rate and occupation must be finite and >= 0");
  }
  const Decay d = decay(gamma, n, t);
  const double a2 = alpha * alpha;
  return 1.0 + d.noise - 4.0 * a2 * d.energy * std::exp(-4.0 * a2);
}

}  // namespace steerlab
