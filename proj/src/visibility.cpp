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

#include "dloop/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dloop/intensity.hpp"
#include "dloop/quadrature.hpp"

namespace dloop::visibility {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_transmission(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("visibility: transmission must lie in [0, 1]");
}

double wrap_two_pi(double chi) {
  double w = std::fmod(chi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

}  // namespace

double visibility_from_extrema(double i_max, double i_min) {
  if (!(i_min >= 0.0) || !(i_max >= i_min))
    throw std::invalid_argument("visibility_from_extrema: need i_max >= i_min >= 0");
  if (i_max == 0.0)
    throw undefined_fringe_error("visibility_from_extrema: flat zero fringe");
  return (i_max - i_min) / (i_max + i_min);
}

double visibility_single(double t_d, AbsorptionMode mode) {
  check_transmission(t_d);
  const double num = mode == AbsorptionMode::stochastic ? std::sqrt(t_d) : t_d;
  return 2.0 * num / (1.0 + t_d);
}

double visibility_double(double t_d, AbsorptionMode mode) {
  check_transmission(t_d);
  const double num = mode == AbsorptionMode::stochastic ? std::sqrt(t_d) : t_d;
  return 4.0 * num / (4.0 + t_d);
}

double k0_monochromatic(double chi_d, double chi_f, double t_d) {
  check_transmission(t_d);
  const double rt = std::sqrt(t_d);
  const double c = std::cos(0.5 * chi_f);
  return t_d + 2.0 * rt * (std::cos(chi_d) + std::cos(chi_d - chi_f)) + 4.0 * c * c;
}

FringeExtrema k0_extrema(double chi_f, double t_d) {
  check_transmission(t_d);
  const double chi = wrap_two_pi(chi_f);
  const double c = std::fabs(std::cos(0.5 * chi));
  const double rt = std::sqrt(t_d);
  FringeExtrema out;
  out.i_max = t_d + 4.0 * c * (rt + c);
  out.i_min = t_d - 4.0 * c * (rt - c);
  const double at_half = 0.5 * chi;  // where cos(chi_d - chi/2) = +1
  const double at_opposite = wrap_two_pi(at_half + kPi);
  if (chi <= kPi) {
    out.chi_at_max = at_half;
    out.chi_at_min = at_opposite;
  } else {
    // maxima and minima interchange on the second half-period
    out.chi_at_max = at_opposite;
    out.chi_at_min = at_half;
  }
  return out;
}

double visibility_double_phase(double t_d, double chi_f, AbsorptionMode mode,
                               double i_incoh) {
  check_transmission(t_d);
  if (!(i_incoh >= 0.0))
    throw std::domain_error("visibility_double_phase: background must be nonnegative");
  // |cos| keeps the contrast nonnegative across the extrema interchange.
  const double c = std::fabs(std::cos(0.5 * chi_f));
  const double denom = 4.0 * c * c + t_d + i_incoh;
  if (denom <= 1e-30)
    throw undefined_fringe_error("visibility_double_phase: zero total intensity");
  const double num = mode == AbsorptionMode::stochastic ? std::sqrt(t_d) : t_d;
  return 4.0 * num * c / denom;
}

double solve_balance_absorber(double alpha_d, double chi_d, double epsilon) {
  if (!(alpha_d >= 0.0))
    throw std::domain_error("solve_balance_absorber: alpha_d must be nonnegative");
  const double ad = std::exp(-alpha_d);
  const double damping = intensity::spectral_damping(chi_d, epsilon);
  const double bracket =
      (7.0 / 169.0) * (1.0 + ad * ad + 2.0 * ad * damping * std::cos(chi_d));
  if (bracket <= 1e-12)
    throw unbounded_absorption_error(
        "solve_balance_absorber: loop A interferes destructively, "
        "no finite absorption balances the beams");
  return -0.5 * std::log(bracket);
}

double solve_unit_visibility_phase(double t_d) {
  if (!(t_d >= 0.0 && t_d <= 1.0))
    throw std::domain_error("solve_unit_visibility_phase: transmission must lie in [0, 1]");
  if (t_d == 0.0) return kPi;  // limit of 2 arccos(sqrt(t)/2)
  return 2.0 * std::acos(0.5 * std::sqrt(t_d));
}

VisibilityResult visibility_numeric(double chi_f, double t_d, double epsilon,
                                    bool use_full_closed_form) {
  check_transmission(t_d);
  if (!(epsilon >= 0.0))
    throw std::domain_error("visibility_numeric: epsilon must be nonnegative");

  const auto fringe = [&](double chi_d) -> double {
    if (use_full_closed_form) {
      const beamline::LoopSettings s{chi_d, chi_f, -0.5 * std::log(t_d), 0.0};
      return intensity::k0_closed(s, {epsilon});
    }
    return k0_monochromatic(chi_d, chi_f, t_d);
  };

  constexpr int kSamples = 4096;
  const double step = kTwoPi / kSamples;
  int i_hi = 0, i_lo = 0;
  double f_hi = -std::numeric_limits<double>::infinity();
  double f_lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSamples; ++i) {
    const double f = fringe(i * step);
    if (f > f_hi) { f_hi = f; i_hi = i; }
    if (f < f_lo) { f_lo = f; i_lo = i; }
  }

  if (f_hi - f_lo <= 1e-12 * (std::fabs(f_hi) + std::fabs(f_lo)))
    return {0.0, 0.0, 0.0};  // flat fringe convention

  const auto refine = [&](int idx, double sign) -> double {
    const auto g = [&](double x) { return sign * fringe(x); };
    double x = quad::golden_section_max(g, (idx - 1) * step, (idx + 1) * step, 1e-10);
    // Parabolic vertex through x +- hh; exact for the cosine fringe and it
    // removes the noise-plateau wander of the bracketing search.
    const double hh = 1e-3;
    const double fp = g(x + hh), f0 = g(x), fm = g(x - hh);
    const double curv = fp - 2.0 * f0 + fm;
    if (std::fabs(curv) > 1e-14 * (std::fabs(f0) + 1.0))
      x -= 0.5 * hh * (fp - fm) / curv;
    return wrap_two_pi(x);
  };

  const double x_max = refine(i_hi, +1.0);
  const double x_min = refine(i_lo, -1.0);
  const double i_max_v = fringe(x_max);
  const double i_min_v = fringe(x_min);
  VisibilityResult out;
  out.value = std::clamp((i_max_v - i_min_v) / (i_max_v + i_min_v), 0.0, 1.0);
  out.argmax_chi_d = x_max;
  out.argmin_chi_d = x_min;
  return out;
}

}  // namespace dloop::visibility
