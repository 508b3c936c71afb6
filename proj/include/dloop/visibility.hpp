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

namespace dloop::visibility {

// Stochastic absorption: absorbing material in the beam, amplitude scales
// with sqrt(T). Deterministic absorption: periodic blocking or reduced beam
// cross section, a fraction T interferes fully and 1-T not at all.
enum class AbsorptionMode { stochastic, deterministic };

struct VisibilityResult {
  double value = 0.0;         // (I_max - I_min) / (I_max + I_min), in [0, 1]
  double argmax_chi_d = 0.0;  // fringe maximum location, in [0, 2pi)
  double argmin_chi_d = 0.0;
};

struct FringeExtrema {
  double i_max = 0.0;
  double i_min = 0.0;
  double chi_at_max = 0.0;
  double chi_at_min = 0.0;
};

// (i_max - i_min) / (i_max + i_min). Throws std::invalid_argument unless
// i_max >= i_min >= 0, undefined_fringe_error when both vanish.
double visibility_from_extrema(double i_max, double i_min);

// Single loop: V = 2 sqrt(T)/(1+T) stochastic, 2T/(1+T) deterministic.
double visibility_single(double t_d, AbsorptionMode mode);

// Double loop, empty beam (f): V = 4 sqrt(T)/(4+T) resp. 4T/(4+T).
double visibility_double(double t_d, AbsorptionMode mode);

// Monochromatic forward fringe with a phase plate in (f) and a stochastic
// absorber in (d), in units where the empty-interferometer maximum is 9:
//   K0 = T + 2 sqrt(T) [cos chi_d + cos(chi_d - chi_f)] + 4 cos^2(chi_f/2).
double k0_monochromatic(double chi_d, double chi_f, double t_d);

// Extrema of that fringe over chi_d:
//   I_max/min = T +- 4 c (sqrt(T) +- c),  c = |cos(chi_f/2)|,
// at chi_d = chi_f/2 and chi_f/2 + pi (mod 2pi). Max and min swap roles on
// alternate chi_f half-periods; the returned pair always has i_max >= i_min.
FringeExtrema k0_extrema(double chi_f, double t_d);

// Visibility of the fringe above, with an optional incoherent background
// added to the total intensity:
//   V = 4 sqrt(T) c / (4 c^2 + T + I_incoh)   (stochastic)
//   V = 4 T c / (4 c^2 + T + I_incoh)         (deterministic)
// c = |cos(chi_f/2)|; I_incoh is in the same units as k0_monochromatic.
// V = 1 is reached exactly at T = 4 c^2 with zero background (stochastic
// only). Throws undefined_fringe_error when the denominator vanishes.
double visibility_double_phase(double t_d, double chi_f, AbsorptionMode mode,
                               double i_incoh = 0.0);

// Absorption in beam (f) that equalizes the chi_f-averaged forward and
// diffracted intensity levels (50/50 beam splitter condition):
//   alpha_f = -1/2 ln{ (7/169) [1 + e^{-2 alpha_d}
//                               + 2 e^{-alpha_d} D(chi_d) cos chi_d] }.
// Throws unbounded_absorption_error when the bracket vanishes.
double solve_balance_absorber(double alpha_d, double chi_d, double epsilon);

// Phase in beam (f) giving unit forward visibility for a given stochastic
// transmission: chi_f = 2 arccos(sqrt(T_d)/2), in [2pi/3, pi]. Returns pi
// exactly in the limit t_d = 0.
double solve_unit_visibility_phase(double t_d);

// Numeric cross-check of the formula family above: scans chi_d over
// [0, 2pi) (4096 samples), refines both extrema by golden section to 1e-10
// followed by a parabolic vertex polish, and reports the contrast with the
// extrema locations. Scans k0_monochromatic by default; with
// use_full_closed_form the full spectrum-averaged K0 is scanned instead
// (the absorber is stochastic, alpha_d = -ln(t_d)/2). A flat fringe yields
// value 0 with both locations at 0.
VisibilityResult visibility_numeric(double chi_f, double t_d, double epsilon,
                                    bool use_full_closed_form = false);

}  // namespace dloop::visibility
