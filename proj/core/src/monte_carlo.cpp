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

#include "steerlab/monte_carlo.hpp"

#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "steerlab/error.hpp"
#include "steerlab/parallel.hpp"

namespace steerlab {

namespace {

struct SampleMoments {
  double count = 0.0;
  Vector4 sum = Vector4::Zero();
  Matrix4 outer = Matrix4::Zero();

  SampleMoments& operator+=(const SampleMoments& o) {
    count += o.count;
    sum += o.sum;
    outer += o.outer;
    return *this;
  }
};

// Pairwise reduction in index order; the result does not depend on how
// batches were scheduled.
SampleMoments pairwise_sum(std::span<const SampleMoments> parts) {
  if (parts.size() == 1) return parts.front();
  const std::size_t half = parts.size() / 2;
  SampleMoments left = pairwise_sum(parts.first(half));
  left += pairwise_sum(parts.subspan(half));
  return left;
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t batch) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
  return std::mt19937_64(seq);
}

struct Regression {
  double value;
  Gains gains;
};

// Least-squares inference of the steered quadratures from the steering
// ones, using the sample covariance.
Regression regress(const SampleMoments& m, Mode steered) {
  const Vector4 mean = m.sum / m.count;
  const Matrix4 cov = (m.outer - m.count * mean * mean.transpose()) / (m.count - 1.0);
  const std::size_t s = steered == Mode::A ? 0 : 2;
  const std::size_t o = steered == Mode::A ? 2 : 0;

  const double gx = cov(s, o) / cov(o, o);
  const double gp = -cov(s + 1, o + 1) / cov(o + 1, o + 1);
  const double res_x = cov(s, s) - 2.0 * gx * cov(s, o) + gx * gx * cov(o, o);
  const double res_p = cov(s + 1, s + 1) + 2.0 * gp * cov(s + 1, o + 1) + gp * gp * cov(o + 1, o + 1);
  return {std::sqrt(res_x * res_p), {gx, gp}};
}

}  // namespace

void McConfig::validate() const {
  if (samples < kMinSamples) {
    throw InvalidArgument("Monte Carlo needs at least " + std::to_string(kMinSamples) +
                          " samples, got " + std::to_string(samples));
  }
  if (batch < 2) throw InvalidArgument("Monte Carlo batch size must be >= 2");
  if (samples / batch < 2) throw InvalidArgument("Monte Carlo needs at least two batches");
}

McEstimate mc_gaussian_witness(const GaussianTwoModeState& state, Mode steered,
                               const McConfig& cfg) {
  cfg.validate();

  const Matrix4 cov = state.covariance();
  Eigen::LLT<Matrix4> llt(cov);
  const Matrix4 lower = llt.matrixL();
  if (llt.info() != Eigen::Success ||
      lower.diagonal().minCoeff() <= 1e-12 * std::sqrt(cov.diagonal().maxCoeff())) {
    throw DegenerateState("covariance matrix is not positive definite");
  }
  // Rank-deficient input is reported as degenerate above, before the
  // Heisenberg check would reject it as unphysical.
  state.require_physical();
  const Vector4 mean = state.mean();

  const auto batches = static_cast<std::size_t>(cfg.samples / cfg.batch);
  const auto base = cfg.samples / static_cast<std::int64_t>(batches);
  const auto extra = cfg.samples % static_cast<std::int64_t>(batches);

  std::vector<SampleMoments> parts(batches);
  parallel_for(batches, [&](std::size_t b) {
    auto rng = substream(cfg.seed, b);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::int64_t count = base + (static_cast<std::int64_t>(b) < extra ? 1 : 0);
    SampleMoments acc;
    Vector4 z;
    for (std::int64_t i = 0; i < count; ++i) {
      for (int k = 0; k < 4; ++k) z[k] = normal(rng);
      const Vector4 x = mean + lower * z;
      acc.sum += x;
      acc.outer.noalias() += x * x.transpose();
    }
    acc.count = static_cast<double>(count);
    parts[b] = acc;
  });

  const Regression pooled = regress(pairwise_sum(parts), steered);

  std::vector<double> estimates;
  estimates.reserve(parts.size());
  for (const auto& part : parts) estimates.push_back(regress(part, steered).value);
  const double nb = static_cast<double>(batches);
  double batch_mean = 0.0;
  for (double v : estimates) batch_mean += v;
  batch_mean /= nb;
  double batch_var = 0.0;
  for (double v : estimates) batch_var += (v - batch_mean) * (v - batch_mean);
  batch_var /= nb - 1.0;

  McEstimate out;
  out.value = pooled.value;
  out.gains = pooled.gains;
  out.std_error = std::sqrt(batch_var / nb);
  out.samples = cfg.samples;
  return out;
}

}  // namespace steerlab
