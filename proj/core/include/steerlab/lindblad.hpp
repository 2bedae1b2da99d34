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

#include <span>
#include <vector>

#include "steerlab/cat_state.hpp"

namespace steerlab {

/// Truncated Fock-space integration settings.
struct FockConfig {
  int dim = 60;        ///< oscillator levels kept
  double dt = 1e-3;    ///< integrator step (absolute time units)
  double t_max = 10.0; ///< latest time a run may be asked for

  /// ceil(4 alpha^2 + 10 alpha + 10).
  static int min_dim(double alpha);

  /// Throws InvalidArgument if dim < min_dim(alpha), dt <= 0 or t_max < 0.
  void validate(double alpha) const;
};

struct LindbladDiagnostics {
  double tail_mass = 0.0;          ///< initial coherent-state mass above dim
  double edge_population = 0.0;    ///< max population in the top levels
  double max_trace_drift = 0.0;
  double max_hermiticity_error = 0.0;
  double max_sigma_z_drift = 0.0;
  double max_sigma_x_drift = 0.0;
  long steps = 0;
};

struct LindbladRun {
  std::vector<ConditionalMoments> moments;  ///< one per requested time
  LindbladDiagnostics diagnostics;
};

/// Evolves the joint spin-oscillator density matrix of the entangled cat
/// under the damped-oscillator master equation
///   d rho/dt = gamma (n+1) (2 a rho a^+ - a^+a rho - rho a^+a)
///            + gamma n     (2 a^+ rho a - a a^+ rho - rho a a^+)
/// acting on the oscillator only, with a fixed-step RK4 scheme. At each
/// requested time (ascending, <= t_max) the spin is projected onto sigma_z
/// and sigma_x eigenstates and the oscillator moments are read off.
///
/// Throws NumericalError if the initial truncation tail or the top-level
/// population exceeds 1e-8, or if trace drift exceeds 1e-8.
LindbladRun lindblad_cat_run(const CatParams& params, const FockConfig& cfg,
                             std::span<const double> times);

ConditionalMoments lindblad_cat_moments(const CatParams& params, const FockConfig& cfg,
                                        double t);

}  // namespace steerlab
