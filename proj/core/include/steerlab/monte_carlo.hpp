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

#include <cstdint>

#include "steerlab/gaussian_state.hpp"
#include "steerlab/witnesses.hpp"

namespace steerlab {

struct McConfig {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::int64_t batch = 10'000;  ///< samples per batch (one RNG substream each)

  static constexpr std::int64_t kMinSamples = 10'000;

  /// Throws InvalidArgument if samples < kMinSamples, batch < 2, or fewer
  /// than two batches would be formed.
  void validate() const;
};

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;  ///< batch-means standard error of `value`
  Gains gains;             ///< sample-regression gains
  std::int64_t samples = 0;
};

/// Samples quadrature 4-vectors from N(mean, cov) and estimates the
/// optimized EPR product from the sample covariance. The point estimate
/// pools every sample; the standard error comes from the spread of
/// per-batch estimates. Batch b draws from an RNG seeded by (seed, b), so
/// results do not depend on thread scheduling.
///
/// Throws DegenerateState if cov is not positive definite, UnphysicalState
/// if it is but violates the uncertainty relation.
McEstimate mc_gaussian_witness(const GaussianTwoModeState& state, Mode steered,
                               const McConfig& cfg);

}  // namespace steerlab
