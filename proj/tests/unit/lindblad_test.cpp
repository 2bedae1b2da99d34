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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "steerlab/cat_state.hpp"
#include "steerlab/error.hpp"

namespace steerlab {
namespace {

double max_moment_diff(const ConditionalMoments& a, const ConditionalMoments& b) {
  double d = std::max(std::abs(a.var_x_given_z - b.var_x_given_z),
                      std::abs(a.var_p_given_x - b.var_p_given_x));
  for (std::size_t i : {0u, 1u}) {
    d = std::max({d, std::abs(a.prob_z[i] - b.prob_z[i]), std::abs(a.prob_x[i] - b.prob_x[i]),
                  std::abs(a.mean_x_given_z[i] - b.mean_x_given_z[i]),
                  std::abs(a.second_x_given_z[i] - b.second_x_given_z[i]),
                  std::abs(a.mean_p_given_x[i] - b.mean_p_given_x[i]),
                  std::abs(a.second_p_given_x[i] - b.second_p_given_x[i])});
  }
  return d;
}

TEST(Lindblad, InitialStateMatchesClosedForm) {
  const ConditionalMoments m = lindblad_cat_moments({1.0, 1.0, 0.0}, {}, 0.0);
  EXPECT_NEAR(m.var_p_given_x, 1.0 - 4.0 * std::exp(-4.0), 1e-6);
  EXPECT_NEAR(m.mean_x_given_z[0], -2.0, 1e-9);
  EXPECT_NEAR(m.mean_p_given_x[0], 2.0 * std::exp(-2.0), 1e-9);
  EXPECT_NEAR(m.prob_z[0], 0.5, 1e-12);
  EXPECT_NEAR(m.prob_x[0], 0.5, 1e-12);
}

TEST(Lindblad, DampedMomentumVariance) {
  const ConditionalMoments m = lindblad_cat_moments({1.0, 1.0, 0.0}, {}, 0.5);
  EXPECT_NEAR(m.var_p_given_x, 1.0 - 4.0 * std::exp(-1.0) * std::exp(-4.0), 1e-3);
}

TEST(Lindblad, ThermalPositionVariance) {
  const ConditionalMoments m = lindblad_cat_moments({1.0, 1.0, 1.0}, {}, 0.1);
  EXPECT_NEAR(m.var_x_given_z, 1.36253849384403630084, 1e-3);
}

TEST(Lindblad, AgreesWithClosedFormAcrossTime) {
  const CatParams params{1.5, 1.0, 1.0};
  std::vector<double> times;
  for (int k = 0; k <= 10; ++k) times.push_back(0.1 * k);
  FockConfig cfg;
  cfg.dim = 70;
  const LindbladRun run = lindblad_cat_run(params, cfg, times);
  ASSERT_EQ(run.moments.size(), times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const ConditionalMoments exact = conditional_moments(params, times[k]);
    EXPECT_LT(max_moment_diff(run.moments[k], exact), 1e-6) << "t=" << times[k];
    EXPECT_EQ(run.moments[k].t, times[k]);
  }
}

TEST(Lindblad, ConservationLaws) {
  const double times[] = {0.5, 1.0, 2.0};
  const LindbladRun run = lindblad_cat_run({1.5, 1.0, 2.0}, {}, times);
  EXPECT_LE(run.diagnostics.max_trace_drift, 1e-8);
  EXPECT_LE(run.diagnostics.max_hermiticity_error, 1e-10);
  EXPECT_LE(run.diagnostics.max_sigma_z_drift, 1e-10);
  EXPECT_LE(run.diagnostics.max_sigma_x_drift, 1e-10);
  EXPECT_LE(run.diagnostics.tail_mass, 1e-8);
  EXPECT_EQ(run.diagnostics.steps, 2000);
}

TEST(Lindblad, TruncationConverged) {
  const CatParams params{1.5, 1.0, 1.0};
  const double times[] = {0.0, 0.3, 1.0};
  FockConfig small, big;
  small.dim = 60;
  big.dim = 120;
  const LindbladRun a = lindblad_cat_run(params, small, times);
  const LindbladRun b = lindblad_cat_run(params, big, times);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_LT(max_moment_diff(a.moments[k], b.moments[k]), 1e-6);
}

TEST(Lindblad, StepHalvingConverged) {
  const CatParams params{1.0, 1.0, 1.0};
  const double times[] = {0.2, 1.0};
  FockConfig coarse, fine;
  fine.dt = coarse.dt / 2;
  const LindbladRun a = lindblad_cat_run(params, coarse, times);
  const LindbladRun b = lindblad_cat_run(params, fine, times);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_LT(max_moment_diff(a.moments[k], b.moments[k]), 1e-6);
}

TEST(Lindblad, ConfigValidation) {
  EXPECT_EQ(FockConfig::min_dim(1.0), 24);
  EXPECT_EQ(FockConfig::min_dim(2.0), 46);
  FockConfig cfg;
  cfg.dim = 20;
  EXPECT_THROW(lindblad_cat_moments({1.0, 1.0, 0.0}, cfg, 0.1), InvalidArgument);
  cfg = {};
  cfg.dt = 0.0;
  EXPECT_THROW(lindblad_cat_moments({1.0, 1.0, 0.0}, cfg, 0.1), InvalidArgument);
  cfg = {};
  cfg.t_max = 1.0;
  EXPECT_THROW(lindblad_cat_moments({1.0, 1.0, 0.0}, cfg, 2.0), InvalidArgument);
  const double unordered[] = {0.5, 0.2};
  EXPECT_THROW(lindblad_cat_run({1.0, 1.0, 0.0}, {}, unordered), InvalidArgument);
}

TEST(Lindblad, HotBathOverflowsCutoff) {
  // Thermal occupation far above what the truncated space holds.
  FockConfig cfg;
  cfg.dim = 30;
  EXPECT_THROW(lindblad_cat_moments({1.0, 1.0, 20.0}, cfg, 3.0), NumericalError);
}

TEST(Lindblad, LargeStepBreaksTraceCheck) {
  FockConfig cfg;
  cfg.dt = 0.5;
  EXPECT_THROW(lindblad_cat_moments({2.0, 1.0, 5.0}, cfg, 5.0), NumericalError);
}

}  // namespace
}  // namespace steerlab
