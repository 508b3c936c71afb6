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

#include "dloop/beamline.hpp"

#include <cmath>
#include <stdexcept>

namespace dloop::beamline {

void validate(const LoopSettings& s) {
  if (!(s.alpha_d >= 0.0) || !(s.alpha_f >= 0.0))
    throw std::domain_error("beamline: absorption exponents must be nonnegative");
  if (!std::isfinite(s.chi_d) || !std::isfinite(s.chi_f))
    throw std::domain_error("beamline: phases must be finite");
}

ComplexAmp path_factor(double chi, double alpha) {
  if (!(alpha >= 0.0))
    throw std::domain_error("path_factor: alpha must be nonnegative");
  const double a = std::exp(-alpha);  // exactly 0 for alpha = inf
  return {a * std::cos(chi), a * std::sin(chi)};
}

ComplexAmp psi_forward(double y, const crystal::CrystalParams& params,
                       const LoopSettings& s) {
  validate(s);
  const ComplexAmp v0 = crystal::transmit_amp(y, params);
  const ComplexAmp vg = crystal::diffract_amp(y, params);
  const ComplexAmp v0p = crystal::diffract_amp(-y, params);
  const ComplexAmp bracket =
      path_factor(s.chi_f, s.alpha_f) + path_factor(s.chi_d, s.alpha_d) + 1.0;
  return v0 * v0 * vg * v0p * bracket;
}

ComplexAmp psi_diffracted(double y, const crystal::CrystalParams& params,
                          const LoopSettings& s) {
  validate(s);
  const ComplexAmp v0 = crystal::transmit_amp(y, params);
  const ComplexAmp vg = crystal::diffract_amp(y, params);
  const ComplexAmp vgp = crystal::transmit_amp(-y, params);  // vG'
  const ComplexAmp v0p = crystal::diffract_amp(-y, params);  // v0'
  const ComplexAmp branch_f = v0 * vgp * path_factor(s.chi_f, s.alpha_f);
  const ComplexAmp branch_d = vg * v0p * (path_factor(s.chi_d, s.alpha_d) + 1.0);
  return v0 * vg * (branch_f + branch_d);
}

}  // namespace dloop::beamline
