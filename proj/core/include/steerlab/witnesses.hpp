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

#include <optional>

#include "steerlab/gaussian_state.hpp"
#include "steerlab/thermal_channel.hpp"

namespace steerlab {

/// Linear inference gains: X_s is estimated by g_x X_o and P_s by -g_p P_o,
/// where s is the steered mode and o the steering mode.
struct Gains {
  double g_x = 0.0;
  double g_p = 0.0;
};

/// Optimized EPR variance product for one steering direction.
///
/// `excess` is value - 1 evaluated without forming `value` first, so its
/// sign is reliable even when value differs from 1 by less than an ulp.
/// Steering is witnessed iff excess < 0.
struct EprResult {
  double value = 1.0;
  double excess = 0.0;
  Gains gains;
  double var_x = 1.0;  ///< optimal inference variance of X_s
  double var_p = 1.0;  ///< optimal inference variance of P_s

  bool steers() const { return excess < 0.0; }
};

/// Gaussian entanglement parameter at its optimal gain.
struct EntResult {
  double value = 1.0;
  double excess = 0.0;  ///< value - 1, computed without cancellation
  double g = 0.0;

  bool entangled() const { return excess < 0.0; }
};

struct SteeringReport {
  double epr_a_given_b = 1.0;
  double epr_b_given_a = 1.0;
  Gains gains_ab;
  Gains gains_ba;
  double ent = 1.0;
  double g_ent = 0.0;
  double t = 0.0;
};

/// g_x = <X_s X_o>/<X_o^2>, g_p = -<P_s P_o>/<P_o^2> for steered mode s.
/// Throws DegenerateState if a steering-mode variance is not positive.
Gains optimal_gains(const GaussianTwoModeState& state, Mode steered);

/// Delta(X_s - g_x X_o) * Delta(P_s + g_p P_o).
double epr_product(const GaussianTwoModeState& state, Mode steered, const Gains& gains);

/// EPR product at the optimal gains, via the conditional variances
/// <X_s^2> - <X_s X_o>^2/<X_o^2> and the P analogue.
EprResult epr_optimized(const GaussianTwoModeState& state, Mode steered);

/// Closed-form EPR_{A|B} for a two-mode squeezed vacuum after time t in
/// independent thermal reservoirs. steered = B applies the same expression
/// with the A and B reservoir labels exchanged.
double epr_thermal_closed_form(SqueezeParam r, const ReservoirParams& res, double t,
                               Mode steered = Mode::A);

/// Earliest t at which EPR_{s|o}(t) of an evolved two-mode squeezed vacuum
/// reaches 1, or nullopt if steering survives for all t. Throws
/// NotApplicable if there is no steering at t = 0.
std::optional<double> sudden_death_time(SqueezeParam r, const ReservoirParams& res,
                                        Mode steered);

/// Ent = Delta(X_A - g X_B) Delta(P_A + g P_B) / (1 + g^2) at the g that
/// solves -<X_A X_B> + g(<X_B^2> - <X_A^2>) + g^2 <X_A X_B> = 0 (minimizing
/// branch). A state with <X_A X_B> = 0 is evaluated at g = 0.
EntResult ent_parameter(const GaussianTwoModeState& state);

/// Ent at an arbitrary gain g.
double ent_at_gain(const GaussianTwoModeState& state, double g);

/// Earliest t at which Ent of an evolved two-mode squeezed vacuum reaches 1,
/// or nullopt if entanglement survives for all t. Throws NotApplicable for
/// r = 0.
std::optional<double> ent_death_time(SqueezeParam r, const ReservoirParams& res);

/// Both steering directions plus Ent for one state.
SteeringReport steering_report(const GaussianTwoModeState& state, double t = 0.0);

}  // namespace steerlab
