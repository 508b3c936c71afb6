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

#include "dloop/beamline.hpp"

namespace dloop::intensity {

// Normalized Gaussian wavenumber spectrum, parametrized by the relative
// bandwidth epsilon = (delta k) / k0. epsilon = 0 is the monochromatic
// limit; the default matches the 1/100 bandwidth used in the figure set.
struct Spectrum {
  double epsilon = 0.01;
  static Spectrum monochromatic() { return {0.0}; }
};

// Spectrum-averaged output intensities behind the analyzer, for unit
// incident amplitude: K0 forward, KG in the Bragg-reflected direction.
struct IntensityPair {
  double k0_forward = 0.0;
  double kg_diffracted = 0.0;
};

// Node counts for the brute-force intensity average.
struct QuadratureConfig {
  int phase_samples = 512;  // uniform samples of the fast crystal phase (even)
  int y_nodes = 257;        // midpoint nodes in t for y = tan(t)
  int k_nodes = 41;         // Gauss-Hermite nodes for the spectral average
  void validate() const;    // throws std::invalid_argument when too coarse
};

// Period mean of sin^{2n}(x) for n = 1..4: 1/2, 3/8, 5/16, 35/128.
// These dyadic rationals are exact in double precision.
double mean_sin_power(int n);

// Fringe envelope e^{-(epsilon chi)^2 / 2} produced by the Gaussian
// spectral average of cos(chi k/k0).
double spectral_damping(double chi, double epsilon);

// Closed-form averaged intensities. The thick-plate limit replaces the fast
// Pendelloesung oscillations by their period means and integrates the
// deviation parameter over the real line, leaving
//
//   K0 = (79 pi/2048) { 1 + T_d + T_f
//          + 2 e^{-alpha_d} D(chi_d) cos chi_d
//          + 2 e^{-alpha_f} D(chi_f) cos chi_f
//          + 2 e^{-(alpha_d+alpha_f)} D(chi_d - chi_f) cos(chi_d - chi_f) }
//
//   KG = (pi/2048) { 65 (1 + T_d) + 417 T_f
//          + 130 e^{-alpha_d} D(chi_d) cos chi_d
//          - 158 e^{-alpha_f} D(chi_f) cos chi_f
//          - 158 e^{-(alpha_d+alpha_f)} D(chi_d - chi_f) cos(chi_d - chi_f) }
//
// with D(chi) = spectral_damping(chi, epsilon).
double k0_closed(const beamline::LoopSettings& s, const Spectrum& spec);
double kg_closed(const beamline::LoopSettings& s, const Spectrum& spec);
IntensityPair intensities_closed(const beamline::LoopSettings& s, const Spectrum& spec);

// Brute-force counterparts of the closed forms, kept independent of them:
// the fast crystal phase is sampled uniformly over [0, 2pi) of the full
// amplitude product (preserving the sin^6/sin^8 correlations between
// factors), the y integral uses the tan substitution, and the spectral
// average applies Gauss-Hermite quadrature to the pairwise path
// interference factors. Converges to k0_closed / kg_closed.
double k0_oracle(const beamline::LoopSettings& s, const Spectrum& spec,
                 const QuadratureConfig& q = {});
double kg_oracle(const beamline::LoopSettings& s, const Spectrum& spec,
                 const QuadratureConfig& q = {});

}  // namespace dloop::intensity
