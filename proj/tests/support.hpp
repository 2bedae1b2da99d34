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

// Hand-rolled generators for property-style tests.

#include <cstdint>
#include <random>
#include <vector>

#include "steerlab/thermal_channel.hpp"

namespace steerlab::testing {

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double pick(std::mt19937_64& rng, const std::vector<double>& values) {
  return values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
}

/// Reservoir with gamma_b = 1 so that t is the dimensionless t' = gamma_b t.
inline ReservoirParams random_reservoir(std::mt19937_64& rng) {
  ReservoirParams res;
  res.gamma_b = 1.0;
  res.gamma_a = pick(rng, {0.0, 0.3, 1.0, 2.5});
  res.n_a = pick(rng, {0.0, 0.5, 1.0, 5.0, 10.0});
  res.n_b = pick(rng, {0.0, 0.5, 1.0, 5.0, 10.0});
  return res;
}

inline double max_abs_diff(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace steerlab::testing
