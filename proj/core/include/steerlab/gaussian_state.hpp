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

#include <cstddef>

#include <Eigen/Dense>

namespace steerlab {

using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

enum class Mode { A, B };
enum class QuadratureKind { X, P };

constexpr Mode other(Mode m) { return m == Mode::A ? Mode::B : Mode::A; }

/// One of the four quadratures X = a + a^dag, P = (a - a^dag)/i of a mode.
/// Vacuum variance is 1 in these units.
struct Quadrature {
  Mode mode;
  QuadratureKind kind;

  /// Row/column in the covariance matrix, ordered (X_A, P_A, X_B, P_B).
  constexpr std::size_t index() const {
    return (mode == Mode::A ? 0u : 2u) + (kind == QuadratureKind::X ? 0u : 1u);
  }
};

inline constexpr Quadrature kXA{Mode::A, QuadratureKind::X};
inline constexpr Quadrature kPA{Mode::A, QuadratureKind::P};
inline constexpr Quadrature kXB{Mode::B, QuadratureKind::X};
inline constexpr Quadrature kPB{Mode::B, QuadratureKind::P};

/// Squeezing parameter r >= 0 of the parametric interaction.
class SqueezeParam {
 public:
  /// Throws InvalidArgument for negative or non-finite r.
  explicit SqueezeParam(double r);

  /// r = E * kappa * tau / hbar for pump amplitude E, coupling kappa and
  /// interaction time tau.
  static SqueezeParam from_interaction(double pump, double kappa, double tau,
                                       double hbar = 1.0);

  double value() const { return r_; }
  /// eta = cosh r, the mode-amplification factor.
  double eta() const;

 private:
  double r_;
};

/// Symmetrized covariance matrix and mean vector of two bosonic modes.
///
/// Internally the state keeps the excess noise above vacuum, cov - I. The
/// full covariance is reconstructed on demand. Keeping the excess lets
/// witnesses resolve values like 1 - 1e-18 that would otherwise round to 1
/// once cov entries are formed.
class GaussianTwoModeState {
 public:
  /// Builds a state from a covariance matrix. The matrix must be finite and
  /// symmetric to 1e-12 relative; it is stored exactly symmetrized.
  /// Physicality is not checked here (see is_physical()).
  static GaussianTwoModeState from_covariance(const Matrix4& cov,
                                              const Vector4& mean = Vector4::Zero());

  /// Builds a state from the excess noise cov - I.
  static GaussianTwoModeState from_excess(const Matrix4& excess,
                                          const Vector4& mean = Vector4::Zero());

  Matrix4 covariance() const { return Matrix4::Identity() + excess_; }
  const Matrix4& excess() const { return excess_; }
  const Vector4& mean() const { return mean_; }

  double cov(Quadrature i, Quadrature j) const;
  double excess(Quadrature i, Quadrature j) const;

  /// Smallest eigenvalue of the Hermitian matrix cov + i*Omega.
  double min_uncertainty_eigenvalue() const;

  /// cov + i*Omega >= -tolerance.
  bool is_physical(double tolerance = kPhysicalityTolerance) const;

  /// Throws UnphysicalState if !is_physical().
  void require_physical() const;

  static constexpr double kPhysicalityTolerance = 1e-9;

 private:
  GaussianTwoModeState(const Matrix4& excess, const Vector4& mean)
      : excess_(excess), mean_(mean) {}

  Matrix4 excess_;
  Vector4 mean_;
};

/// Both modes in vacuum: cov = I.
GaussianTwoModeState vacuum();

/// Two-mode squeezed vacuum produced by the parametric Hamiltonian acting
/// on vacuum inputs.
GaussianTwoModeState two_mode_squeezed(SqueezeParam r);

/// 1/sqrt(det cov). Throws UnphysicalState if det cov <= 0.
double purity(const GaussianTwoModeState& state);

}  // namespace steerlab
