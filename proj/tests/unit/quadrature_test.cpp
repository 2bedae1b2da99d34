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

#include <gtest/gtest.h>

#include "steerlab/cat_state.hpp"
#include "steerlab/error.hpp"

namespace steerlab {
namespace {

double gaussian(double x, double mu, double var) {
  return std::exp(-(x - mu) * (x - mu) / (2 * var)) / std::sqrt(2 * M_PI * var);
}

TEST(Quadrature, FringeDensityVarianceAtAlphaOne) {
  for (int s : {+1, -1}) {
    const double v = quadrature_variance([s](double p) { return cond_dist_p(1.0, p, s); },
                                         cat_support(1.0), 4001);
    EXPECT_NEAR(v, 0.92673744444506327883, 1e-6);
  }
}

TEST(Quadrature, PureGaussianHasUnitVariance) {
  const auto m = quadrature_moments([](double x) { return gaussian(x, 0.0, 1.0); }, {-10, 10}, 2001);
  EXPECT_NEAR(m.norm, 1.0, 1e-12);
  EXPECT_NEAR(m.mean, 0.0, 1e-12);
  EXPECT_NEAR(m.variance, 1.0, 1e-10);
}

TEST(Quadrature, ShiftedAndScaledGaussian) {
  const auto m = quadrature_moments([](double x) { return gaussian(x, 1.5, 2.25); }, {-15, 18}, 4001);
  EXPECT_NEAR(m.mean, 1.5, 1e-10);
  EXPECT_NEAR(m.variance, 2.25, 1e-10);
}

TEST(Quadrature, LargeCatHillsAreAtTheNoiseLevel) {
  for (int s : {+1, -1}) {
    const double v = quadrature_variance([s](double x) { return cond_dist_x(3.0, x, s); },
                                         cat_support(3.0), 4001);
    EXPECT_NEAR(v, 1.0, 1e-9);
  }
}

TEST(Quadrature, EvenPointCountIsRoundedUp) {
  const auto odd = quadrature_moments([](double x) { return gaussian(x, 0, 1); }, {-9, 9}, 801);
  const auto even = quadrature_moments([](double x) { return gaussian(x, 0, 1); }, {-9, 9}, 800);
  EXPECT_EQ(odd.variance, even.variance);
}

TEST(Quadrature, SupportTooSmallIsReported) {
  EXPECT_THROW(quadrature_moments([](double x) { return gaussian(x, 0, 1); }, {-3, 3}, 2001),
               NumericalError);
  EXPECT_THROW(quadrature_variance([](double x) { return cond_dist_x(3.0, x, 1); }, {-4, 4}, 2001),
               NumericalError);
}

TEST(Quadrature, RejectsBadInput) {
  auto f = [](double x) { return gaussian(x, 0, 1); };
  EXPECT_THROW(quadrature_moments(f, {-9, 9}, 2), InvalidArgument);
  EXPECT_THROW(quadrature_moments(f, {1, 1}, 101), InvalidArgument);
  EXPECT_THROW(quadrature_moments([](double x) { return x; }, {-1, 1}, 101), InvalidArgument);
}

TEST(Quadrature, CatSupportWidth) {
  const Interval s = cat_support(1.5);
  EXPECT_EQ(s.lo, -11.0);
  EXPECT_EQ(s.hi, 11.0);
}

}  // namespace
}  // namespace steerlab
