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

#include <functional>

namespace steerlab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct DensityMoments {
  double norm = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

using Density = std::function<double(double)>;

/// Normalization, mean and variance of a 1-D density by composite Simpson
/// integration over `points` nodes (rounded up to odd). Throws
/// InvalidArgument for points < 3 or an empty interval, NumericalError if
/// the norm differs from 1 by more than 1e-6 (support too small).
DensityMoments quadrature_moments(const Density& density, Interval support, int points);

/// Variance part of quadrature_moments().
double quadrature_variance(const Density& density, Interval support, int points);

/// [-(2 alpha + 8), 2 alpha + 8]: holds all but ~1e-15 of the mass of the
/// cat's conditional quadrature densities.
Interval cat_support(double alpha);

}  // namespace steerlab
