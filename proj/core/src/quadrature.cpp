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

#include "steerlab/quadrature.hpp"

#include <cmath>
#include <string>

#include "steerlab/error.hpp"

namespace steerlab {

DensityMoments quadrature_moments(const Density& density, Interval support, int points) {
  if (points < 3) throw InvalidArgument("quadrature needs at least 3 points");
  if (!(support.hi > support.lo)) throw InvalidArgument("quadrature support is empty");
  if (points % 2 == 0) ++points;

  const int intervals = points - 1;
  const double h = (support.hi - support.lo) / intervals;
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (int k = 0; k <= intervals; ++k) {
    const double x = support.lo + k * h;
    const double w = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    const double f = density(x);
    if (f < 0.0) throw InvalidArgument("density is negative on the support");
    m0 += w * f;
    m1 += w * f * x;
    m2 += w * f * x * x;
  }
  m0 *= h / 3.0;
  m1 *= h / 3.0;
  m2 *= h / 3.0;

  if (std::abs(m0 - 1.0) > 1e-6) {
    throw NumericalError("density normalization is " + std::to_string(m0) +
                         "; support too small or density not normalized");
  }
  DensityMoments out;
  out.norm = m0;
  out.mean = m1 / m0;
  out.variance = m2 / m0 - out.mean * out.mean;
  return out;
}

double quadrature_variance(const Density& density, Interval support, int points) {
  return quadrature_moments(density, support, points).variance;
}

Interval cat_support(double alpha) {
  const double half = 2.0 * std::abs(alpha) + 8.0;
  return {-half, half};
}

}  // namespace steerlab
