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

#include "steerlab/lindblad.hpp"

#include <cmath>
#include <complex>
#include <iomanip>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "steerlab/error.hpp"

namespace steerlab {

namespace {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

constexpr double kTolerance = 1e-8;

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

// Coherent-state Fock amplitudes for real beta, truncated to dim levels.
// Also returns the probability mass that falls above the truncation.
struct Truncated {
  Eigen::VectorXd amplitudes;
  double tail;
};

Truncated coherent(double beta, int dim) {
  Truncated out{Eigen::VectorXd(dim), 0.0};
  double c = std::exp(-0.5 * beta * beta);
  for (int k = 0;; ++k) {
    if (k < dim) {
      out.amplitudes[k] = c;
    } else {
      out.tail += c * c;
      if (c * c < 1e-300 || (k > dim + 50 && c * c < 1e-30 * out.tail)) break;
    }
    c *= beta / std::sqrt(static_cast<double>(k + 1));
    if (k > dim + 10000) break;
  }
  return out;
}

// Oscillator part of the master equation applied to one spin block.
class Dissipator {
 public:
  Dissipator(int dim, double gamma, double n)
      : dim_(dim), down_(gamma * (n + 1.0)), up_(gamma * n), root_(dim + 1) {
    for (int k = 0; k <= dim; ++k) root_[k] = std::sqrt(static_cast<double>(k));
  }

  template <typename In, typename Out>
  void apply(const In& rho, Out&& out) const {
    const int last = dim_ - 1;
    for (int c = 0; c < dim_; ++c) {
      for (int r = 0; r < dim_; ++r) {
        // a a^+ in the truncated space has (k+1) on the diagonal except at the top.
        const double hr = r == last ? 0.0 : r + 1.0;
        const double hc = c == last ? 0.0 : c + 1.0;
        Complex v = -(down_ * (r + c) + up_ * (hr + hc)) * rho(r, c);
        if (r < last && c < last) v += 2.0 * down_ * root_[r + 1] * root_[c + 1] * rho(r + 1, c + 1);
        if (r > 0 && c > 0) v += 2.0 * up_ * root_[r] * root_[c] * rho(r - 1, c - 1);
        out(r, c) = v;
      }
    }
  }

 private:
  int dim_;
  double down_;
  double up_;
  std::vector<double> root_;
};

struct ModeMoments {
  double prob;
  double mean_x, mean_p, second_x, second_p;
};

template <typename Block>
ModeMoments read_moments(const Block& r) {
  const int dim = static_cast<int>(r.rows());
  Complex a{0.0, 0.0}, a2{0.0, 0.0};
  double number = 0.0;
  double prob = 0.0;
  for (int k = 0; k < dim; ++k) {
    prob += r(k, k).real();
    number += k * r(k, k).real();
    if (k + 1 < dim) a += std::sqrt(k + 1.0) * r(k + 1, k);
    if (k + 2 < dim) a2 += std::sqrt((k + 1.0) * (k + 2.0)) * r(k + 2, k);
  }
  a /= prob;
  a2 /= prob;
  number /= prob;
  return {prob, 2.0 * a.real(), 2.0 * a.imag(), 2.0 * a2.real() + 2.0 * number + 1.0,
          -2.0 * a2.real() + 2.0 * number + 1.0};
}

ConditionalMoments project(const MatrixC& rho, int dim, double t) {
  const auto up = rho.topLeftCorner(dim, dim);
  const auto down = rho.bottomRightCorner(dim, dim);
  const auto coh = rho.topRightCorner(dim, dim);
  const auto coh_t = rho.bottomLeftCorner(dim, dim);

  const MatrixC plus_x = 0.5 * (up + down + coh + coh_t);
  const MatrixC minus_x = 0.5 * (up + down - coh - coh_t);

  const ModeMoments z[2] = {read_moments(up), read_moments(down)};
  const ModeMoments x[2] = {read_moments(plus_x), read_moments(minus_x)};

  ConditionalMoments m;
  m.t = t;
  m.var_x_given_z = 0.0;
  m.var_p_given_x = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    m.prob_z[i] = z[i].prob;
    m.mean_x_given_z[i] = z[i].mean_x;
    m.second_x_given_z[i] = z[i].second_x;
    m.var_x_given_z += z[i].prob * (z[i].second_x - z[i].mean_x * z[i].mean_x);

    m.prob_x[i] = x[i].prob;
    m.mean_p_given_x[i] = x[i].mean_p;
    m.second_p_given_x[i] = x[i].second_p;
    m.var_p_given_x += x[i].prob * (x[i].second_p - x[i].mean_p * x[i].mean_p);
  }
  return m;
}

}  // namespace

int FockConfig::min_dim(double alpha) {
  return static_cast<int>(std::ceil(4.0 * alpha * alpha + 10.0 * alpha + 10.0));
}

void FockConfig::validate(double alpha) const {
  if (dim < min_dim(alpha)) {
    throw InvalidArgument("Fock dimension " + std::to_string(dim) + " is below " +
                          std::to_string(min_dim(alpha)) + " for alpha = " + std::to_string(alpha));
  }
  if (!std::isfinite(dt) || !(dt > 0.0)) throw InvalidArgument("Fock dt must be > 0");
  if (!std::isfinite(t_max) || t_max < 0.0) throw InvalidArgument("Fock t_max must be >= 0");
}

LindbladRun lindblad_cat_run(const CatParams& params, const FockConfig& cfg,
                             std::span<const double> times) {
  params.validate();
  cfg.validate(params.alpha);
  double previous = 0.0;
  for (double t : times) {
    if (!std::isfinite(t) || t < previous) throw InvalidArgument("sample times must be ascending and >= 0");
    if (t > cfg.t_max) throw InvalidArgument("sample time exceeds FockConfig::t_max");
    previous = t;
  }

  const int dim = cfg.dim;
  LindbladRun run;

  // (|-alpha>|up> + i|alpha>|down>)/sqrt(2); spin up occupies the first block.
  const Truncated minus = coherent(-params.alpha, dim);
  const Truncated plus = coherent(params.alpha, dim);
  run.diagnostics.tail_mass = std::max(minus.tail, plus.tail);
  if (run.diagnostics.tail_mass > kTolerance) {
    throw NumericalError("Fock truncation tail " + sci(run.diagnostics.tail_mass) +
                         " exceeds 1e-8; increase dim");
  }
  VectorC psi(2 * dim);
  psi.head(dim) = minus.amplitudes.cast<Complex>();
  psi.tail(dim) = Complex{0.0, 1.0} * plus.amplitudes.cast<Complex>();
  psi.normalize();
  MatrixC rho = psi * psi.adjoint();

  auto sigma_z = [&](const MatrixC& r) {
    return (r.topLeftCorner(dim, dim).trace() - r.bottomRightCorner(dim, dim).trace()).real();
  };
  auto sigma_x = [&](const MatrixC& r) { return 2.0 * r.topRightCorner(dim, dim).trace().real(); };
  const double sz0 = sigma_z(rho);
  const double sx0 = sigma_x(rho);

  const Dissipator dissipator(dim, params.gamma, params.n);
  auto rhs = [&](const MatrixC& r, MatrixC& out) {
    dissipator.apply(r.topLeftCorner(dim, dim), out.topLeftCorner(dim, dim));
    dissipator.apply(r.topRightCorner(dim, dim), out.topRightCorner(dim, dim));
    dissipator.apply(r.bottomLeftCorner(dim, dim), out.bottomLeftCorner(dim, dim));
    dissipator.apply(r.bottomRightCorner(dim, dim), out.bottomRightCorner(dim, dim));
  };

  const int edge_levels = std::max(2, dim / 20);
  auto check = [&](const MatrixC& r) {
    auto& d = run.diagnostics;
    const double drift = std::abs(r.trace() - 1.0);
    if (!std::isfinite(drift) || drift > kTolerance) {
      throw NumericalError("trace drift " + sci(drift) + " exceeds 1e-8; reduce dt");
    }
    d.max_trace_drift = std::max(d.max_trace_drift, drift);
    d.max_hermiticity_error =
        std::max(d.max_hermiticity_error, (r - r.adjoint()).cwiseAbs().maxCoeff());
    d.max_sigma_z_drift = std::max(d.max_sigma_z_drift, std::abs(sigma_z(r) - sz0));
    d.max_sigma_x_drift = std::max(d.max_sigma_x_drift, std::abs(sigma_x(r) - sx0));
  };
  auto check_edge = [&](const MatrixC& r) {
    double edge = 0.0;
    for (int k = dim - edge_levels; k < dim; ++k) {
      edge += r(k, k).real() + r(dim + k, dim + k).real();
    }
    run.diagnostics.edge_population = std::max(run.diagnostics.edge_population, edge);
    if (edge > kTolerance) {
      throw NumericalError("population near the Fock cutoff is " + sci(edge) +
                           "; increase dim");
    }
  };

  MatrixC k1(2 * dim, 2 * dim), k2(2 * dim, 2 * dim), k3(2 * dim, 2 * dim), k4(2 * dim, 2 * dim);
  MatrixC stage(2 * dim, 2 * dim);
  double now = 0.0;
  check(rho);
  for (double target : times) {
    const double span = target - now;
    const long steps = span > 0.0 ? static_cast<long>(std::ceil(span / cfg.dt - 1e-9)) : 0;
    const double h = steps > 0 ? span / static_cast<double>(steps) : 0.0;
    for (long s = 0; s < steps; ++s) {
      rhs(rho, k1);
      stage = rho + (0.5 * h) * k1;
      rhs(stage, k2);
      stage = rho + (0.5 * h) * k2;
      rhs(stage, k3);
      stage = rho + h * k3;
      rhs(stage, k4);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      check(rho);
    }
    run.diagnostics.steps += steps;
    now = target;
    check_edge(rho);
    run.moments.push_back(project(rho, dim, target));
  }
  return run;
}

ConditionalMoments lindblad_cat_moments(const CatParams& params, const FockConfig& cfg, double t) {
  const double times[] = {t};
  return lindblad_cat_run(params, cfg, times).moments.front();
}

}  // namespace steerlab
