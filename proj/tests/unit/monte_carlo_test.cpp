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
#include <cstdlib>

#include <gtest/gtest.h>

#include "steerlab/error.hpp"
#include "steerlab/thermal_channel.hpp"
#include "support.hpp"

namespace steerlab {
namespace {

constexpr double kInvCosh2 = 0.26580222883407969212;

McConfig config(std::int64_t samples, std::uint64_t seed) {
  McConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

TEST(MonteCarlo, TwoModeSqueezedWithinThreeStandardErrors) {
  const auto s = two_mode_squeezed(SqueezeParam(1.0));
  const McEstimate e = mc_gaussian_witness(s, Mode::A, config(1'000'000, 42));
  EXPECT_EQ(e.samples, 1'000'000);
  EXPECT_GT(e.std_error, 0.0);
  EXPECT_LT(e.std_error, 1e-3);
  EXPECT_LT(std::abs(e.value - kInvCosh2), 3 * e.std_error);
  EXPECT_NEAR(e.gains.g_x, -std::tanh(2.0), 5e-3);
  EXPECT_NEAR(e.gains.g_p, -std::tanh(2.0), 5e-3);
}

TEST(MonteCarlo, VacuumIsAtTheBound) {
  const McEstimate e = mc_gaussian_witness(vacuum(), Mode::B, config(1'000'000, 7));
  EXPECT_LT(std::abs(e.value - 1.0), 3 * e.std_error);
}

TEST(MonteCarlo, ThermalGridPointMatchesClosedForm) {
  const ReservoirParams res{0.3, 1.0, 1.0, 5.0};
  const double t = 0.15;
  const auto s = evolve(two_mode_squeezed(SqueezeParam(1.5)), res, t);
  for (Mode m : {Mode::A, Mode::B}) {
    const McEstimate e = mc_gaussian_witness(s, m, config(1'000'000, 11));
    const double exact = epr_thermal_closed_form(SqueezeParam(1.5), res, t, m);
    EXPECT_LT(std::abs(e.value - exact), 3 * e.std_error);
  }
}

TEST(MonteCarlo, UnbiasedOverThirtySeeds) {
  const ReservoirParams res{0.0, 1.0, 0.0, 1.0};
  const double t = 0.1;
  const auto s = evolve(two_mode_squeezed(SqueezeParam(1.0)), res, t);
  const double exact = epr_thermal_closed_form(SqueezeParam(1.0), res, t);
  double mean = 0.0, se2 = 0.0;
  const int runs = 30;
  for (int k = 0; k < runs; ++k) {
    const McEstimate e = mc_gaussian_witness(s, Mode::A, config(100'000, 1000 + k));
    mean += e.value / runs;
    se2 += e.std_error * e.std_error / runs;
  }
  EXPECT_LT(std::abs(mean - exact), std::sqrt(se2));
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  const auto s = two_mode_squeezed(SqueezeParam(0.7));
  const McConfig cfg = config(200'000, 99);
  ::setenv("STEERLAB_THREADS", "1", 1);
  const McEstimate one = mc_gaussian_witness(s, Mode::A, cfg);
  ::setenv("STEERLAB_THREADS", "4", 1);
  const McEstimate four = mc_gaussian_witness(s, Mode::A, cfg);
  ::unsetenv("STEERLAB_THREADS");
  const McEstimate def = mc_gaussian_witness(s, Mode::A, cfg);
  EXPECT_EQ(one.value, four.value);
  EXPECT_EQ(one.std_error, four.std_error);
  EXPECT_EQ(one.value, def.value);
  EXPECT_EQ(one.gains.g_x, def.gains.g_x);
}

TEST(MonteCarlo, SeedChangesTheDraw) {
  const auto s = two_mode_squeezed(SqueezeParam(0.7));
  EXPECT_NE(mc_gaussian_witness(s, Mode::A, config(20'000, 1)).value,
            mc_gaussian_witness(s, Mode::A, config(20'000, 2)).value);
}

TEST(MonteCarlo, RefusesTooFewSamples) {
  EXPECT_THROW(mc_gaussian_witness(vacuum(), Mode::A, config(9'999, 1)), InvalidArgument);
  McConfig cfg = config(10'000, 1);
  cfg.batch = 10'000;  // one batch: no spread to estimate an error from
  EXPECT_THROW(mc_gaussian_witness(vacuum(), Mode::A, cfg), InvalidArgument);
  cfg.batch = 1;
  EXPECT_THROW(mc_gaussian_witness(vacuum(), Mode::A, cfg), InvalidArgument);
}

TEST(MonteCarlo, RankDeficientCovarianceIsDegenerate) {
  Matrix4 c = Matrix4::Identity();
  c(0, 0) = c(2, 2) = c(0, 2) = c(2, 0) = 1.0;  // X_A = X_B exactly
  EXPECT_THROW(mc_gaussian_witness(GaussianTwoModeState::from_covariance(c), Mode::A,
                                   config(20'000, 1)),
               DegenerateState);
}

}  // namespace
}  // namespace steerlab
