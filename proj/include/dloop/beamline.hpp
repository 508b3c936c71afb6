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

#include <cmath>

#include "dloop/crystal.hpp"
#include "dloop/types.hpp"

namespace dloop::beamline {

// Phase shifters and absorbers inserted in beams (d) and (f) of the double
// loop. Phases are stored as the dimensionless products chi = Delta * k0
// (every observable depends on Delta and k0 only through this product).
// Absorptions are amplitude exponents alpha >= 0 with beam transmission
// T = e^{-2 alpha}; alpha = +infinity is a first-class value meaning a
// closed path (exact zero amplitude).
struct LoopSettings {
  double chi_d = 0.0;
  double chi_f = 0.0;
  double alpha_d = 0.0;
  double alpha_f = 0.0;

  double transmission_d() const { return std::exp(-2.0 * alpha_d); }
  double transmission_f() const { return std::exp(-2.0 * alpha_f); }
};

// Throws std::domain_error on negative/NaN absorption or non-finite phase.
void validate(const LoopSettings& s);

// e^{i chi - alpha}; exactly 0 for alpha = +infinity.
ComplexAmp path_factor(double chi, double alpha);

// Forward beam behind the analyzer. All three paths share the crystal
// factor and differ only by phase and absorption:
//   psi0 = v0^2 vG v0' [ e^{i chi_f - alpha_f} + e^{i chi_d - alpha_d} + 1 ]
// for unit incident amplitude.
ComplexAmp psi_forward(double y, const crystal::CrystalParams& params,
                       const LoopSettings& s);

// Diffracted beam. The path through (f) carries a different count of
// reflections and transmissions, so the superposition is unsymmetric:
//   psiG = v0 vG [ v0 vG' e^{i chi_f - alpha_f} + vG v0' (e^{i chi_d - alpha_d} + 1) ].
ComplexAmp psi_diffracted(double y, const crystal::CrystalParams& params,
                          const LoopSettings& s);

}  // namespace dloop::beamline
