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

// Independent verifiers: Gaussian Monte Carlo, 1-D quadrature and the
// truncated-Fock master-equation integrator.

#include "steerlab/lindblad.hpp"
#include "steerlab/monte_carlo.hpp"
#include "steerlab/quadrature.hpp"
