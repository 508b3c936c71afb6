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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dloop/intensity.hpp"
#include "dloop/table.hpp"
#include "dloop/visibility.hpp"

namespace dloop::sweep {

enum class SweepVariable { chi_d, chi_f, t_d, alpha_d, alpha_f, i_incoh };

std::optional<SweepVariable> parse_sweep_variable(std::string_view name);
std::string sweep_variable_name(SweepVariable v);

struct SweepSpec {
  SweepVariable variable = SweepVariable::chi_d;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;  // grid points, endpoints included
  beamline::LoopSettings settings{};
  intensity::Spectrum spectrum{};
  double i_incoh = 0.0;
  visibility::AbsorptionMode mode = visibility::AbsorptionMode::stochastic;
};

// Evaluates K0, KG and the second-loop-phase visibility on a uniform grid,
// in deterministic row order. Rows where the visibility is undefined carry
// NaN in the V column. Throws std::invalid_argument on malformed ranges
// (from >= to, steps < 2, or a grid too fine to represent).
table::DataTable run_sweep(const SweepSpec& spec);

}  // namespace dloop::sweep
