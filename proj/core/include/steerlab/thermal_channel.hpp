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

#include "steerlab/gaussian_state.hpp"

namespace steerlab {

/// Independent Markovian reservoirs, one per mode.
struct ReservoirParams {
  double gamma_a = 0.0;  ///< amplitude decay rate of mode A
  double gamma_b = 0.0;  ///< amplitude decay rate of mode B
  double n_a = 0.0;      ///< mean thermal occupation of A's bath
  double n_b = 0.0;      ///< mean thermal occupation of B's bath

  /// Throws InvalidArgument unless every field is finite and >= 0.
  void validate() const;

  double gamma(Mode m) const { return m == Mode::A ? gamma_a : gamma_b; }
  double occupation(Mode m) const { return m == Mode::A ? n_a : n_b; }

  /// Exchanges the roles of A and B.
  ReservoirParams swapped() const { return {gamma_b, gamma_a, n_b, n_a}; }
};

/// Closed-form Gaussian channel. Each single-mode block contracts by
/// e^{-2 gamma t} and relaxes to (1 + 2n) I; the A-B block contracts by
/// e^{-(gamma_a + gamma_b) t}; means decay by e^{-gamma t}.
///
/// Throws InvalidArgument for t < 0 or bad reservoir params, UnphysicalState
/// for an unphysical input.
GaussianTwoModeState evolve(const GaussianTwoModeState& state,
                            const ReservoirParams& res, double t);

/// Same channel obtained by integrating the moment equations
///   dV_jj/dt = -2 gamma_j (V_jj - (1 + 2 n_j) I),
///   dV_ab/dt = -(gamma_a + gamma_b) V_ab,   dm_j/dt = -gamma_j m_j
/// with `steps` classical Runge-Kutta steps. Used as an independent check
/// of evolve(). Throws InvalidArgument for steps < 1.
GaussianTwoModeState integrate_channel(const GaussianTwoModeState& state,
                                       const ReservoirParams& res, double t,
                                       int steps);

}  // namespace steerlab
