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

#include "dloop/crystal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dloop::crystal {

namespace {

void check_params(const CrystalParams& p) {
  if (!(p.thickness_cm > 0.0) || !(p.pendelloesung_cm > 0.0))
    throw std::domain_error("crystal: thickness and Pendelloesung length must be positive");
}

// e^{iPD} with P D = -pi (1 + y) D / Delta0 = -(1 + y) abar.
ComplexAmp global_phase(double y, const CrystalParams& p) {
  const double pd = -(1.0 + y) * p.abar();
  return {std::cos(pd), std::sin(pd)};
}

}  // namespace

double CrystalParams::abar() const {
  return std::numbers::pi * thickness_cm / pendelloesung_cm;
}

CrystalParams CrystalParams::with_abar(double abar, bool include_global_phase) {
  if (!(abar > 0.0)) throw std::domain_error("crystal: abar must be positive");
  return {abar / std::numbers::pi, 1.0, include_global_phase};
}

double pendelloesung(double lambda_cm, double gamma_rad, double potential_ratio) {
  if (!(lambda_cm > 0.0))
    throw std::domain_error("pendelloesung: wavelength must be positive");
  if (!(potential_ratio > 0.0))
    throw std::domain_error("pendelloesung: potential ratio must be positive");
  if (!(std::fabs(gamma_rad) < 0.5 * std::numbers::pi))
    throw std::domain_error("pendelloesung: |gamma| must be below pi/2");
  return lambda_cm * std::cos(gamma_rad) / potential_ratio;
}

double deviation_y(double k_per_cm, double theta_rad, double theta_bragg_rad,
                   double potential_ratio) {
  if (!(potential_ratio > 0.0))
    throw std::domain_error("deviation_y: potential ratio must be positive");
  return k_per_cm * std::sin(2.0 * theta_bragg_rad) *
         (theta_bragg_rad - theta_rad) / potential_ratio;
}

ComplexAmp transmit_amp(double y, const CrystalParams& params) {
  check_params(params);
  const double s = std::sqrt(1.0 + y * y);
  const double x = params.abar() * s;
  ComplexAmp v0{std::cos(x), y * std::sin(x) / s};
  if (params.include_global_phase) v0 *= global_phase(y, params);
  return v0;
}

ComplexAmp diffract_amp(double y, const CrystalParams& params) {
  check_params(params);
  const double s = std::sqrt(1.0 + y * y);
  const double x = params.abar() * s;
  ComplexAmp vg{0.0, -std::sin(x) / s};
  if (params.include_global_phase) vg *= global_phase(y, params);
  return vg;
}

}  // namespace dloop::crystal
