// Copyright 2026 dloop developers
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

// dloop: double-loop perfect-crystal interferometer toolkit.
//
// Subcommands: figure, sweep, intensity, solve balance,
// solve unit-visibility, verify. Tables are emitted as CSV (default) or
// JSON; --out writes to a file, otherwise stdout. Relative --out paths are
// resolved under $DLOOP_OUT_DIR when that variable is set.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dloop/figures.hpp"
#include "dloop/intensity.hpp"
#include "dloop/sweep.hpp"
#include "dloop/table.hpp"
#include "dloop/verify.hpp"
#include "dloop/visibility.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::filesystem::path resolve_out_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("DLOOP_OUT_DIR"); dir && *dir)
      p = std::filesystem::path(dir) / p;
  }
  return p;
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  const auto path = resolve_out_path(out);
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot open output file: " << path.string() << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

int emit_table(const dloop::table::DataTable& t, const std::string& format,
               const std::string& out) {
  return emit(format == "json" ? dloop::table::to_json(t) : dloop::table::to_csv(t),
              out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double-loop perfect-crystal interferometer toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--out may follow the subcommand

  std::string format = "csv";
  std::string out_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path,
                 "output file (relative paths resolve under $DLOOP_OUT_DIR)");

  // figure
  auto* fig_cmd = app.add_subcommand("figure", "render a canonical data set");
  std::string fig_id;
  fig_cmd->add_option("--id", fig_id, "figure id (fig2..fig8c)")->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate K0, KG and visibility on a grid");
  std::string sweep_var;
  dloop::sweep::SweepSpec spec;
  std::string mode_name = "sto";
  sweep_cmd->add_option("--var", sweep_var, "swept variable (chi_d|chi_f|t_d|alpha_d|alpha_f|i_incoh)")->required();
  sweep_cmd->add_option("--from", spec.from, "grid start")->required();
  sweep_cmd->add_option("--to", spec.to, "grid end")->required();
  sweep_cmd->add_option("--steps", spec.steps, "grid points (>= 2)")->required();
  sweep_cmd->add_option("--chi-d", spec.settings.chi_d, "fixed phase in beam (d)");
  sweep_cmd->add_option("--chi-f", spec.settings.chi_f, "fixed phase in beam (f)");
  sweep_cmd->add_option("--alpha-d", spec.settings.alpha_d, "fixed absorption in beam (d)");
  sweep_cmd->add_option("--alpha-f", spec.settings.alpha_f, "fixed absorption in beam (f)");
  sweep_cmd->add_option("--eps", spec.spectrum.epsilon, "relative bandwidth")->capture_default_str();
  sweep_cmd->add_option("--background", spec.i_incoh, "incoherent background intensity");
  sweep_cmd->add_option("--mode", mode_name, "absorption mode")->check(CLI::IsMember({"sto", "det"}))->capture_default_str();

  // intensity
  auto* int_cmd = app.add_subcommand("intensity", "closed-form K0 and KG for one setting");
  dloop::beamline::LoopSettings int_settings;
  double int_eps = 0.01;
  int_cmd->add_option("--chi-d", int_settings.chi_d, "phase in beam (d)");
  int_cmd->add_option("--chi-f", int_settings.chi_f, "phase in beam (f)");
  int_cmd->add_option("--alpha-d", int_settings.alpha_d, "absorption in beam (d)");
  int_cmd->add_option("--alpha-f", int_settings.alpha_f, "absorption in beam (f)");
  int_cmd->add_option("--eps", int_eps, "relative bandwidth")->capture_default_str();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "parameter matching");
  solve_cmd->require_subcommand(1);
  auto* bal_cmd = solve_cmd->add_subcommand("balance", "absorption making the device a 50/50 splitter");
  double bal_alpha_d = 0.0, bal_chi_d = 0.0, bal_eps = 0.01;
  bal_cmd->add_option("--alpha-d", bal_alpha_d, "absorption in beam (d)");
  bal_cmd->add_option("--chi-d", bal_chi_d, "phase in beam (d)");
  bal_cmd->add_option("--eps", bal_eps, "relative bandwidth")->capture_default_str();
  auto* uv_cmd = solve_cmd->add_subcommand("unit-visibility", "phase in beam (f) giving contrast 1");
  double uv_t = 1.0;
  uv_cmd->add_option("--t", uv_t, "stochastic transmission in beam (d)")->required();

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run the oracle and invariant suites");
  dloop::verify::VerifyOptions vopts;
  ver_cmd->add_option("--tol", vopts.tolerance, "bound for numeric-equivalence checks")->capture_default_str();
  ver_cmd->add_option("--samples", vopts.samples, "random settings for the oracle comparison")->capture_default_str();
  ver_cmd->add_option("--seed", vopts.seed, "random seed")->capture_default_str();
  ver_cmd->add_option("--phase-samples", vopts.quadrature.phase_samples, "fast-phase samples")->capture_default_str();
  ver_cmd->add_option("--y-nodes", vopts.quadrature.y_nodes, "tan-rule nodes")->capture_default_str();
  ver_cmd->add_option("--k-nodes", vopts.quadrature.k_nodes, "Gauss-Hermite nodes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*fig_cmd) {
      const auto id = dloop::figures::parse_figure_id(fig_id);
      if (!id) {
        std::cerr << "error: unknown figure id '" << fig_id << "'; valid:";
        for (const auto& n : dloop::figures::figure_id_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return kExitUsage;
      }
      return emit_table(dloop::figures::render_figure(*id), format, out_path);
    }

    if (*sweep_cmd) {
      const auto var = dloop::sweep::parse_sweep_variable(sweep_var);
      if (!var) {
        std::cerr << "error: unknown sweep variable '" << sweep_var << "'\n";
        return kExitUsage;
      }
      spec.variable = *var;
      spec.mode = mode_name == "det" ? dloop::visibility::AbsorptionMode::deterministic
                                     : dloop::visibility::AbsorptionMode::stochastic;
      return emit_table(dloop::sweep::run_sweep(spec), format, out_path);
    }

    if (*int_cmd) {
      const auto pair = dloop::intensity::intensities_closed(int_settings, {int_eps});
      dloop::table::DataTable t;
      t.title = "intensity";
      t.columns = {"K0", "KG"};
      t.rows = {{pair.k0_forward, pair.kg_diffracted}};
      return emit_table(t, format, out_path);
    }

    if (*bal_cmd) {
      const double alpha_f =
          dloop::visibility::solve_balance_absorber(bal_alpha_d, bal_chi_d, bal_eps);
      dloop::table::DataTable t;
      t.title = "solve balance";
      t.columns = {"alpha_f", "transmission_f"};
      t.rows = {{alpha_f, std::exp(-2.0 * alpha_f)}};
      return emit_table(t, format, out_path);
    }

    if (*uv_cmd) {
      const double chi_f = dloop::visibility::solve_unit_visibility_phase(uv_t);
      dloop::table::DataTable t;
      t.title = "solve unit-visibility";
      t.columns = {"chi_f"};
      t.rows = {{chi_f}};
      return emit_table(t, format, out_path);
    }

    if (*ver_cmd) {
      const auto report = dloop::verify::run_verification(vopts);
      const std::string text = format == "json"
                                   ? dloop::verify::report_to_json(report, vopts)
                                   : dloop::verify::format_report(report, vopts);
      const int rc = emit(text, out_path);
      if (rc != kExitOk) return rc;
      return report.all_passed() ? kExitOk : kExitCheckFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  return kExitUsage;
}
