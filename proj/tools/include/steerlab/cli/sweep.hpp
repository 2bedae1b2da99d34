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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace steerlab::cli {

/// Bad flags, unknown preset, unwritable output: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { TwoMode, Cat };

/// One two-mode curve. Time runs in t' = gamma_b t with gamma_b = 1, so
/// gamma_a = gamma_ratio.
struct TwoModeCurve {
  double r = 1.0;
  double gamma_ratio = 0.0;
  double n_a = 0.0;
  double n_b = 0.0;
};

/// One cat curve; t' = gamma t.
struct CatCurve {
  double alpha = 1.0;
  double n = 0.0;
};

struct SweepSpec {
  Scenario scenario = Scenario::TwoMode;
  std::optional<std::string> preset;
  std::vector<TwoModeCurve> two_mode;
  std::vector<CatCurve> cat;
  double t_prime_max = 2.0;
  int steps = 400;

  /// Throws UsageError unless steps >= 2, t_prime_max > 0 and the curve
  /// list for the scenario is non-empty.
  void validate() const;
};

const std::vector<std::string>& preset_names();

/// Curves of a named figure preset with default grid. Throws UsageError
/// for unknown names.
SweepSpec preset_spec(std::string_view name);

/// t'_k = k t_max / (steps - 1), k = 0 .. steps-1.
std::vector<double> time_grid(double t_prime_max, int steps);

struct TwoModeRow {
  double t_prime, r, gamma_ratio, n_a, n_b;
  double epr_ab, epr_ba, ent;
  double g_x, g_p;  ///< optimal inference gains for EPR_{A|B}
  double g_ent;
};

struct CatRow {
  double t_prime, alpha, n;
  double var_x_cond, var_p_cond, epr;
};

struct SweepResult {
  Scenario scenario = Scenario::TwoMode;
  std::vector<std::vector<TwoModeRow>> two_mode;  ///< per curve, per time
  std::vector<std::vector<CatRow>> cat;
};

/// Evaluates every curve (in parallel) on the time grid.
SweepResult run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kTwoModeHeader =
    "t_prime,r,gamma_ratio,n_a,n_b,epr_ab,epr_ba,ent,g_x,g_p,g_ent";
inline constexpr std::string_view kCatHeader = "t_prime,alpha,n,var_x_cond,var_p_cond,epr";

/// Header plus one row per (curve, t') in curve-then-time order, 17
/// significant digits.
void write_csv(const SweepResult& result, std::ostream& out);

/// Throws UsageError if the file cannot be written.
void write_csv_file(const SweepResult& result, const std::string& path);

}  // namespace steerlab::cli
