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

#include "steerlab/gaussian_state.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

// Two-mode symplectic form for [X, P] = 2i.
Matrix4 symplectic_form() {
  Matrix4 omega = Matrix4::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

void require_finite(const Matrix4& m, const Vector4& mean) {
  if (!m.allFinite() || !mean.allFinite()) {
    throw InvalidArgument("covariance and mean must be finite");
  }
}

}  // namespace

SqueezeParam::SqueezeParam(double r) : r_(r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidArgument("squeeze parameter must be finite and >= 0, got " +
                          std::to_string(r));
  }
}

SqueezeParam SqueezeParam::from_interaction(double pump, double kappa, double tau,
                                            double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  return SqueezeParam(pump * kappa * tau / hbar);
}

double SqueezeParam::eta() const { return std::cosh(r_); }

GaussianTwoModeState GaussianTwoModeState::from_covariance(const Matrix4& cov,
                                                           const Vector4& mean) {
  require_finite(cov, mean);
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("covariance matrix is not symmetric");
  }
  const Matrix4 sym = 0.5 * (cov + cov.transpose());
  return GaussianTwoModeState(sym - Matrix4::Identity(), mean);
}

GaussianTwoModeState GaussianTwoModeState::from_excess(const Matrix4& excess,
                                                       const Vector4& mean) {
  require_finite(excess, mean);
  const double scale = std::max(1.0, excess.cwiseAbs().maxCoeff());
  if ((excess - excess.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("excess covariance matrix is not symmetric");
  }
  return GaussianTwoModeState(0.5 * (excess + excess.transpose()), mean);
}

double GaussianTwoModeState::cov(Quadrature i, Quadrature j) const {
  const double e = excess_(i.index(), j.index());
  return i.index() == j.index() ? 1.0 + e : e;
}

double GaussianTwoModeState::excess(Quadrature i, Quadrature j) const {
  return excess_(i.index(), j.index());
}

double GaussianTwoModeState::min_uncertainty_eigenvalue() const {
  using Complex4 = Eigen::Matrix4cd;
  const std::complex<double> i{0.0, 1.0};
  const Complex4 m = covariance().cast<std::complex<double>>() +
                     i * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Complex4> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool GaussianTwoModeState::is_physical(double tolerance) const {
  return min_uncertainty_eigenvalue() >= -tolerance;
}

void GaussianTwoModeState::require_physical() const {
  const double lambda = min_uncertainty_eigenvalue();
  if (lambda < -kPhysicalityTolerance) {
    throw UnphysicalState("cov + i*Omega has eigenvalue " + std::to_string(lambda));
  }
}

GaussianTwoModeState vacuum() {
  return GaussianTwoModeState::from_excess(Matrix4::Zero());
}

GaussianTwoModeState two_mode_squeezed(SqueezeParam r) {
  const double s = std::sinh(r.value());
  // cosh 2r - 1 = 2 sinh^2 r, exact near r = 0.
  const double diag = 2.0 * s * s;
  const double cross = std::sinh(2.0 * r.value());
  Matrix4 excess = Matrix4::Zero();
  excess.diagonal().setConstant(diag);
  excess(kXA.index(), kXB.index()) = excess(kXB.index(), kXA.index()) = -cross;
  excess(kPA.index(), kPB.index()) = excess(kPB.index(), kPA.index()) = cross;
  return GaussianTwoModeState::from_excess(excess);
}

double purity(const GaussianTwoModeState& state) {
  // Cholesky pivots keep the determinant accurate for strongly squeezed
  // states, where a direct expansion cancels terms of order cosh^4 2r.
  const Eigen::LLT<Matrix4> llt(state.covariance());
  if (llt.info() != Eigen::Success) {
    throw UnphysicalState("covariance is not positive definite");
  }
  const Vector4 pivots = llt.matrixL().toDenseMatrix().diagonal();
  return 1.0 / pivots.prod();
}

}  // namespace steerlab
