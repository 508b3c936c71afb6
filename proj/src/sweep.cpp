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

#include "dloop/sweep.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dloop::sweep {

using beamline::LoopSettings;
using table::format_g9;

namespace {

constexpr std::array<const char*, 6> kVariableNames{
    "chi_d", "chi_f", "t_d", "alpha_d", "alpha_f", "i_incoh"};

std::string fixed_params(const SweepSpec& spec) {
  std::string p;
  const auto add = [&](const char* k, double v, SweepVariable var) {
    if (spec.variable == var) return;  // swept, not fixed
    if (!p.empty()) p += ';';
    p += k;
    p += '=';
    p += format_g9(v);
  };
  add("chi_d", spec.settings.chi_d, SweepVariable::chi_d);
  add("chi_f", spec.settings.chi_f, SweepVariable::chi_f);
  add("alpha_d", spec.settings.alpha_d, SweepVariable::alpha_d);
  add("alpha_f", spec.settings.alpha_f, SweepVariable::alpha_f);
  add("background", spec.i_incoh, SweepVariable::i_incoh);
  if (!p.empty()) p += ';';
  p += "eps=";
  p += format_g9(spec.spectrum.epsilon);
  return p;
}

}  // namespace

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  for (std::size_t i = 0; i < kVariableNames.size(); ++i)
    if (name == kVariableNames[i]) return static_cast<SweepVariable>(i);
  return std::nullopt;
}

std::string sweep_variable_name(SweepVariable v) {
  return kVariableNames[static_cast<std::size_t>(v)];
}

table::DataTable run_sweep(const SweepSpec& spec) {
  if (spec.steps < 2)
    throw std::invalid_argument("sweep: need at least 2 steps");
  if (!(spec.from < spec.to))
    throw std::invalid_argument("sweep: need from < to");
  const double step = (spec.to - spec.from) / (spec.steps - 1);
  if (spec.from + step == spec.from)
    throw std::invalid_argument("sweep: grid spacing vanishes, identical rows");

  const char* vcol =
      spec.mode == visibility::AbsorptionMode::stochastic ? "V_sto2df" : "V_det2df";
  const std::string fixed = fixed_params(spec);

  table::DataTable t;
  t.title = "sweep " + sweep_variable_name(spec.variable);
  t.columns = {sweep_variable_name(spec.variable),
               "K0(" + fixed + ")", "KG(" + fixed + ")",
               std::string(vcol) + "(" + fixed + ")"};
  t.rows.reserve(spec.steps);

  for (int i = 0; i < spec.steps; ++i) {
    const double x = spec.from + (spec.to - spec.from) * i / (spec.steps - 1);
    LoopSettings s = spec.settings;
    double background = spec.i_incoh;
    switch (spec.variable) {
      case SweepVariable::chi_d: s.chi_d = x; break;
      case SweepVariable::chi_f: s.chi_f = x; break;
      case SweepVariable::alpha_d: s.alpha_d = x; break;
      case SweepVariable::alpha_f: s.alpha_f = x; break;
      case SweepVariable::t_d:
        if (!(x >= 0.0 && x <= 1.0))
          throw std::invalid_argument("sweep: t_d range must lie in [0, 1]");
        s.alpha_d = -0.5 * std::log(x);
        break;
      case SweepVariable::i_incoh:
        if (!(x >= 0.0))
          throw std::invalid_argument("sweep: i_incoh range must be nonnegative");
        background = x;
        break;
    }
    const double k0 = intensity::k0_closed(s, spec.spectrum);
    const double kg = intensity::kg_closed(s, spec.spectrum);
    double v;
    try {
      v = visibility::visibility_double_phase(s.transmission_d(), s.chi_f,
                                              spec.mode, background);
    } catch (const undefined_fringe_error&) {
      v = std::numeric_limits<double>::quiet_NaN();
    }
    t.rows.push_back({x, k0, kg, v});
  }
  return t;
}

}  // namespace dloop::sweep
