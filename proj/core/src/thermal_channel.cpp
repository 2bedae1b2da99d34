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

#include "steerlab/thermal_channel.hpp"

#include <cmath>
#include <string>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

void require_time(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw InvalidArgument("evolution time must be finite and >= 0, got " + std::to_string(t));
  }
}

Vector4 per_quadrature(double a, double b) { return Vector4(a, a, b, b); }

}  // namespace

void ReservoirParams::validate() const {
  for (double v : {gamma_a, gamma_b, n_a, n_b}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidArgument("reservoir rates and occupations must be finite and >= 0");
    }
  }
}

GaussianTwoModeState evolve(const GaussianTwoModeState& state, const ReservoirParams& res,
                            double t) {
  require_time(t);
  res.validate();
  state.require_physical();

  // Amplitude contraction k_j = e^{-gamma_j t} and injected noise
  // 2 n_j (1 - k_j^2) per quadrature.
  const Vector4 k = per_quadrature(std::exp(-res.gamma_a * t), std::exp(-res.gamma_b * t));
  const Vector4 noise = per_quadrature(-2.0 * res.n_a * std::expm1(-2.0 * res.gamma_a * t),
                                       -2.0 * res.n_b * std::expm1(-2.0 * res.gamma_b * t));

  Matrix4 excess = k.asDiagonal() * state.excess() * k.asDiagonal();
  excess.diagonal() += noise;
  return GaussianTwoModeState::from_excess(excess, k.cwiseProduct(state.mean()));
}

GaussianTwoModeState integrate_channel(const GaussianTwoModeState& state,
                                       const ReservoirParams& res, double t, int steps) {
  if (steps < 1) throw InvalidArgument("integrate_channel needs steps >= 1");
  require_time(t);
  res.validate();

  const Vector4 rate = per_quadrature(res.gamma_a, res.gamma_b);
  const Vector4 fixed_point = per_quadrature(1.0 + 2.0 * res.n_a, 1.0 + 2.0 * res.n_b);
  const auto g = rate.asDiagonal();
  const Vector4 drive = 2.0 * rate.cwiseProduct(fixed_point);

  auto dcov = [&](const Matrix4& v) -> Matrix4 {
    Matrix4 d = -(g * v + v * g);
    d.diagonal() += drive;
    return d;
  };
  auto dmean = [&](const Vector4& m) -> Vector4 { return -(g * m); };

  Matrix4 v = state.covariance();
  Vector4 m = state.mean();
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const Matrix4 k1 = dcov(v);
    const Matrix4 k2 = dcov(v + 0.5 * h * k1);
    const Matrix4 k3 = dcov(v + 0.5 * h * k2);
    const Matrix4 k4 = dcov(v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const Vector4 l1 = dmean(m);
    const Vector4 l2 = dmean(m + 0.5 * h * l1);
    const Vector4 l3 = dmean(m + 0.5 * h * l2);
    const Vector4 l4 = dmean(m + h * l3);
    m += (h / 6.0) * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
  }
  return GaussianTwoModeState::from_covariance(0.5 * (v + v.transpose()), m);
}

}  // namespace steerlab
