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

#include "steerlab/cli/app.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steerlab/cli/sweep.hpp"
#include "steerlab/cli/verify.hpp"
#include "steerlab/error.hpp"

namespace steerlab::cli {

namespace {

struct SweepArgs {
  std::string preset;
  std::string scenario = "two-mode";
  std::string out;
  int steps = 400;
  double t_prime_max = 2.0;
  std::vector<double> r{1.0};
  double gamma_ratio = 0.0;
  std::vector<double> n_a{0.0};
  std::vector<double> n_b{0.0};
  std::vector<double> alpha{1.0};
  std::vector<double> n{0.0};
};

struct VerifyArgs {
  std::string scope = "all";
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::int64_t batch = 10'000;
  int fock_dim = 60;
  double dt = 1e-3;
};

SweepSpec build_spec(const SweepArgs& a) {
  SweepSpec spec;
  if (!a.preset.empty()) {
    spec = preset_spec(a.preset);
  } else if (a.scenario == "two-mode") {
    for (double r : a.r)
      for (double na : a.n_a)
        for (double nb : a.n_b) spec.two_mode.push_back({r, a.gamma_ratio, na, nb});
  } else {
    spec.scenario = Scenario::Cat;
    for (double alpha : a.alpha)
      for (double n : a.n) spec.cat.push_back({alpha, n});
  }
  spec.steps = a.steps;
  spec.t_prime_max = a.t_prime_max;
  return spec;
}

int do_sweep(const SweepArgs& a, std::ostream& out) {
  const SweepSpec spec = build_spec(a);
  spec.validate();
  const SweepResult result = run_sweep(spec);
  if (a.out.empty() || a.out == "-") {
    write_csv(result, out);
  } else {
    write_csv_file(result, a.out);
  }
  return kOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Scope scope = a.scope == "gaussian" ? Scope::Gaussian : a.scope == "cat" ? Scope::Cat : Scope::All;
  McConfig mc;
  mc.samples = a.samples;
  mc.seed = a.seed;
  mc.batch = a.batch;
  FockConfig fock;
  fock.dim = a.fock_dim;
  fock.dt = a.dt;
  const VerifyReport report = run_verify(scope, mc, fock);
  print_report(report, out);
  return report.passed() ? kOk : kVerifyFailed;
}

// Fills options that were not given on the command line from a
// `key = value` file. CLI11's own config handling only runs for the root
// app, so subcommand files are applied here with its INI reader.
void apply_config(CLI::App& sub, const std::string& path) {
  const std::vector<CLI::ConfigItem> items = CLI::ConfigINI().from_file(path);
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    CLI::Option* opt = sub.get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config") {
      throw CLI::ConfigError::Extras(item.fullname());
    }
    if (opt->count() > 0) continue;
    opt->add_result(item.inputs);
    opt->run_callback();
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decoherence of EPR steering: sweeps and oracle checks", "steerlab"};
  app.require_subcommand(1);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Evaluate witness curves on a t' grid and write CSV");
  std::string sweep_config;
  sweep->add_option("--config", sweep_config, "key = value file; command-line flags take precedence");
  sweep->add_option("--preset", sa.preset, "Figure preset: fig2-left, fig2-right, fig3, fig4-left, "
                                           "fig4-right, fig5-left, fig5-right, fig8");
  sweep->add_option("--scenario", sa.scenario, "two-mode or cat (ignored with --preset)")
      ->check(CLI::IsMember({"two-mode", "cat"}))
      ->capture_default_str();
  sweep->add_option("--out", sa.out, "Output CSV path (stdout if omitted or '-')");
  sweep->add_option("--steps", sa.steps, "Time points per curve")->capture_default_str();
  sweep->add_option("--t-prime-max", sa.t_prime_max, "Last t' of the grid")->capture_default_str();
  sweep->add_option("--r", sa.r, "Squeeze parameters (comma list)")->delimiter(',')->capture_default_str();
  sweep->add_option("--gamma-ratio", sa.gamma_ratio, "gamma_a / gamma_b")->capture_default_str();
  sweep->add_option("--n-a", sa.n_a, "Thermal occupations of reservoir A (comma list)")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--n-b", sa.n_b, "Thermal occupations of reservoir B (comma list)")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--alpha", sa.alpha, "Cat amplitudes (comma list)")->delimiter(',')->capture_default_str();
  sweep->add_option("--n", sa.n, "Cat bath occupations (comma list)")->delimiter(',')->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Cross-check analytic results against the oracles");
  std::string verify_config;
  verify->add_option("--config", verify_config, "key = value file; command-line flags take precedence");
  verify->add_option("--scope", va.scope, "gaussian, cat or all")
      ->check(CLI::IsMember({"gaussian", "cat", "all"}))
      ->capture_default_str();
  verify->add_option("--samples", va.samples, "Monte Carlo samples per point")->capture_default_str();
  verify->add_option("--seed", va.seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--batch", va.batch, "Monte Carlo samples per batch")->capture_default_str();
  verify->add_option("--fock-dim", va.fock_dim, "Fock truncation")->capture_default_str();
  verify->add_option("--dt", va.dt, "Lindblad integrator step")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*sweep && !sweep_config.empty()) apply_config(*sweep, sweep_config);
    if (*verify && !verify_config.empty()) apply_config(*verify, verify_config);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sweep) return do_sweep(sa, out);
    return do_verify(va, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace steerlab::cli
