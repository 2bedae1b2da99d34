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

#include <algorithm>
#include <cmath>
#include <optional>

#include <boost/math/tools/roots.hpp>

namespace steerlab::detail {

/// Earliest t in (0, t_max] where margin(t) >= 0, given margin(0) < 0.
/// Scans a uniform grid for the first non-negative sample, then bisects the
/// bracketing cell to ~1 ulp. Returns nullopt if no grid sample is >= 0.
template <typename Margin>
std::optional<double> first_upcrossing(Margin&& margin, double t_max, int grid = 4096) {
  double lo = 0.0;
  for (int k = 1; k <= grid; ++k) {
    const double hi = t_max * static_cast<double>(k) / grid;
    const double value = margin(hi);
    if (value == 0.0) return hi;
    if (value > 0.0) {
      auto converged = [](double a, double b) {
        return std::abs(b - a) <= 4e-16 * std::max(1.0, std::abs(b));
      };
      const auto [left, right] = boost::math::tools::bisect(margin, lo, hi, converged);
      return 0.5 * (left + right);
    }
    lo = hi;
  }
  return std::nullopt;
}

/// Time after which every reservoir contraction factor e^{-2 gamma t} has
/// fallen below 1e-8; nullopt if no mode is damped.
inline std::optional<double> relaxation_horizon(double gamma_a, double gamma_b) {
  double slowest = 0.0;
  for (double g : {gamma_a, gamma_b}) {
    if (g > 0.0 && (slowest == 0.0 || g < slowest)) slowest = g;
  }
  if (slowest == 0.0) return std::nullopt;
  return std::log(1e8) / (2.0 * slowest);
}

/// sqrt((1 + x)(1 + y)) - 1 without cancellation for small x, y.
inline double sqrt_product_minus_one(double x, double y) {
  const double root = std::sqrt((1.0 + x) * (1.0 + y));
  return (x + y + x * y) / (root + 1.0);
}

}  // namespace steerlab::detail
