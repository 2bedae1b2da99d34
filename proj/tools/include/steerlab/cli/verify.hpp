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

#include <iosfwd>
#include <string>
#include <vector>

#include "steerlab/lindblad.hpp"
#include "steerlab/monte_carlo.hpp"

namespace steerlab::cli {

enum class Scope { Gaussian, Cat, All };

struct VerifyCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const;
};

/// Cross-checks the analytic results against the independent oracles.
/// Gaussian scope: closed form vs covariance pipeline, channel ODE vs
/// closed map, sudden-death constant, Monte Carlo witness at a handful of
/// grid points (3 standard errors). Cat scope: quadrature of the fringe
/// density and truncated-Fock Lindblad moments (1e-3).
///
/// Throws InvalidArgument for an out-of-range budget before any work.
VerifyReport run_verify(Scope scope, const McConfig& mc, const FockConfig& fock);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace steerlab::cli
