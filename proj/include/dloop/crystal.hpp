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

#include "dloop/types.hpp"

namespace dloop::crystal {

// Dynamical-diffraction amplitudes of a single perfect-crystal plate in
// symmetric Laue geometry.
//
// A plate of thickness D splits an incident wave into a transmitted
// amplitude v0 and a Bragg-reflected amplitude vG which oscillate with the
// thickness on the scale of the Pendelloesung length Delta0:
//
//   v0(y) = e^{iPD} [ cos(abar s) + i y sin(abar s) / s ]
//   vG(y) = -i e^{iPD} sin(abar s) / s              with s = sqrt(1 + y^2)
//
// where abar = pi D / Delta0 counts Pendelloesung oscillations through the
// plate, y is the dimensionless deviation from the exact Bragg direction,
// and P = -pi (1 + y) / Delta0 is a common phase. The mirrored partners of
// the four-plate geometry are obtained by sign reversal of y:
// v0'(y) = vG(-y) and vG'(y) = v0(-y).
//
// |v0|^2 + |vG|^2 = 1 identically (no absorption inside the plate).

struct CrystalParams {
  double thickness_cm = 0.5;          // plate thickness D
  double pendelloesung_cm = 0.00641;  // Delta0; silicon (2,2,0) at 2 A
  bool include_global_phase = false;  // keep the common factor e^{iPD}

  // abar = pi D / Delta0, recomputed from the geometry.
  double abar() const;

  // Convenience for amplitude-level work at a prescribed abar
  // (unit Pendelloesung length, thickness abar/pi).
  static CrystalParams with_abar(double abar, bool include_global_phase = false);
};

// Pendelloesung length Delta0 = lambda cos(gamma) / |V(G)/E|, where gamma is
// the angle between the beam and the surface normal and |V(G)/E| the ratio
// of crystal potential to particle energy (~1e-6 for thermal neutrons).
// Note gamma here is a geometry angle, unrelated to any phase factor.
double pendelloesung(double lambda_cm, double gamma_rad, double potential_ratio);

// Deviation parameter y = k sin(2 theta_B) (theta_B - theta) / |V(G)/E|.
// y = 0 is exact Bragg incidence; theta < theta_B gives y > 0.
double deviation_y(double k_per_cm, double theta_rad, double theta_bragg_rad,
                   double potential_ratio);

// Transmitted amplitude v0(y). The global phase e^{iPD} is dropped unless
// params.include_global_phase is set; moduli are unaffected either way.
ComplexAmp transmit_amp(double y, const CrystalParams& params);

// Reflected amplitude vG(y). Call with -y for the mirrored partners.
ComplexAmp diffract_amp(double y, const CrystalParams& params);

}  // namespace dloop::crystal
