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

#pragma once

#include <array>
#include <numbers>

namespace steerlab {

/// Spin-oscillator cat (|-alpha>|up> + e^{i theta}|alpha>|down>)/sqrt(2)
/// with theta fixed at pi/2 and real alpha. The oscillator is coupled to a
/// thermal bath (gamma, n); the spin is not damped.
struct CatParams {
  double alpha = 1.0;
  double gamma = 0.0;
  double n = 0.0;

  static constexpr double theta = std::numbers::pi / 2.0;

  /// Throws InvalidArgument unless alpha > 0 and gamma, n >= 0, all finite.
  void validate() const;
};

/// Index into the per-outcome arrays below.
constexpr std::size_t outcome_index(int outcome) { return outcome > 0 ? 0u : 1u; }

/// Moments of the oscillator conditioned on a spin measurement, in X/P
/// units (vacuum variance 1). Arrays are indexed [+1, -1].
struct ConditionalMoments {
  std::array<double, 2> prob_z{0.5, 0.5};
  std::array<double, 2> mean_x_given_z{};
  std::array<double, 2> second_x_given_z{};
  double var_x_given_z = 1.0;  ///< outcome-averaged conditional variance

  std::array<double, 2> prob_x{0.5, 0.5};
  std::array<double, 2> mean_p_given_x{};
  std::array<double, 2> second_p_given_x{};
  double var_p_given_x = 1.0;

  double t = 0.0;
};

/// Joint spin-oscillator moments from which the conditional ones follow.
struct JointMoments {
  double x = 0.0, x_sz = 0.0, x2 = 0.0, x2_sz = 0.0;
  double p = 0.0, p_sx = 0.0, p2 = 0.0, p2_sx = 0.0;
  double t = 0.0;
};

/// Density of X_A given sigma_z = outcome (+1 or -1) at t = 0: a unit
/// variance Gaussian centred at -2 alpha * outcome. Throws InvalidArgument
/// for |outcome| != 1.
double cond_dist_x(double alpha, double x, int outcome);

/// Density of P_A given sigma_x = outcome at t = 0: unit Gaussian envelope
/// times the fringe factor 1 + outcome * sin(2 alpha p).
double cond_dist_p(double alpha, double p, int outcome);

/// Same densities in lower-case (x, p) units with a = (x + i p)/c. The X/P
/// versions above are these with c = 2.
double cond_dist_x_scaled(double alpha, double x, int outcome, double c);
double cond_dist_p_scaled(double alpha, double p, int outcome, double c);

JointMoments joint_moments(const CatParams& params, double t);

/// <O | +-1> = +-<O sigma> + <O>, with P(+-1) = 1/2.
ConditionalMoments conditional_from_joint(const JointMoments& joint);

/// Closed-form conditional moments at time t. Throws InvalidArgument for t < 0.
ConditionalMoments conditional_moments(const CatParams& params, double t);

/// Var(X_A | sigma_z) = 1 + 2n(1 - e^{-2 gamma t}).
double cat_var_x_cond(const CatParams& params, double t);

/// Var(P_A | sigma_x) = 1 + 2n(1 - e^{-2 gamma t}) - 4 alpha^2 e^{-2 gamma t} e^{-4 alpha^2}.
double cat_var_p_cond(const CatParams& params, double t);

/// Var(X_A | sigma_z) * Var(P_A | sigma_x); steering of the oscillator by
/// the spin is witnessed when this is below 1.
double cat_steering(const CatParams& params, double t);

/// Momentum variance of the single-mode cat (|-alpha> + i|alpha>)/sqrt(2)
/// after time t in a bath (gamma, n).
double single_mode_cat_var_p(double alpha, double gamma, double n, double t);

}  // namespace steerlab
