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

#include "dloop/intensity.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dloop/quadrature.hpp"

namespace dloop::intensity {

using beamline::LoopSettings;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kForwardScale = 79.0 * kPi / 2048.0;
constexpr double kUnitScale = kPi / 2048.0;

void check_spectrum(const Spectrum& spec) {
  if (!(spec.epsilon >= 0.0))
    throw std::domain_error("spectrum: epsilon must be nonnegative");
}

}  // namespace

void QuadratureConfig::validate() const {
  if (phase_samples < 3 || y_nodes < 3 || k_nodes < 3)
    throw std::invalid_argument("quadrature config: all node counts must be at least 3");
  if (phase_samples % 2 != 0)
    throw std::invalid_argument("quadrature config: phase_samples must be even");
}

double mean_sin_power(int n) {
  switch (n) {
    case 1: return 1.0 / 2.0;
    case 2: return 3.0 / 8.0;
    case 3: return 5.0 / 16.0;
    case 4: return 35.0 / 128.0;
    default:
      throw std::domain_error("mean_sin_power: exponent 2n supported for n in 1..4");
  }
}

double spectral_damping(double chi, double epsilon) {
  if (!(epsilon >= 0.0))
    throw std::domain_error("spectral_damping: epsilon must be nonnegative");
  const double a = epsilon * chi;
  return std::exp(-0.5 * a * a);
}

double k0_closed(const LoopSettings& s, const Spectrum& spec) {
  beamline::validate(s);
  check_spectrum(spec);
  const double td = s.transmission_d();
  const double tf = s.transmission_f();
  const double ad = std::exp(-s.alpha_d);
  const double af = std::exp(-s.alpha_f);
  const double e = spec.epsilon;
  const double bracket =
      1.0 + td + tf +
      2.0 * ad * spectral_damping(s.chi_d, e) * std::cos(s.chi_d) +
      2.0 * af * spectral_damping(s.chi_f, e) * std::cos(s.chi_f) +
      2.0 * ad * af * spectral_damping(s.chi_d - s.chi_f, e) * std::cos(s.chi_d - s.chi_f);
  return kForwardScale * bracket;
}

double kg_closed(const LoopSettings& s, const Spectrum& spec) {
  beamline::validate(s);
  check_spectrum(spec);
  const double td = s.transmission_d();
  const double tf = s.transmission_f();
  const double ad = std::exp(-s.alpha_d);
  const double af = std::exp(-s.alpha_f);
  const double e = spec.epsilon;
  const double bracket =
      65.0 * (1.0 + td) + 417.0 * tf +
      130.0 * ad * spectral_damping(s.chi_d, e) * std::cos(s.chi_d) -
      158.0 * af * spectral_damping(s.chi_f, e) * std::cos(s.chi_f) -
      158.0 * ad * af * spectral_damping(s.chi_d - s.chi_f, e) * std::cos(s.chi_d - s.chi_f);
  return kUnitScale * bracket;
}

IntensityPair intensities_closed(const LoopSettings& s, const Spectrum& spec) {
  return {k0_closed(s, spec), kg_closed(s, spec)};
}

namespace {

// k-averaged pairwise interference factors between the three paths. With
// k = k0 (1 + sqrt(2) eps t) the Gaussian spectral average of a product
// e^{i k Delta_p / k0_ref} e^{-i k Delta_q / ...} reduces to averages of
// e^{i (k/k0) chi} over e^{-t^2}, evaluated here by Gauss-Hermite sums.
struct PathAverages {
  double t_d = 0.0, t_f = 0.0;
  std::complex<double> g_fd, g_f1, g_d1;
};

PathAverages k_average_factors(const LoopSettings& s, const Spectrum& spec,
                               int k_nodes) {
  const quad::GaussHermiteRule rule = quad::gauss_hermite(k_nodes);
  const double scale = std::numbers::sqrt2 * spec.epsilon;
  std::complex<double> e_fd{}, e_f1{}, e_d1{};
  double wsum = 0.0;
  for (int m = 0; m < k_nodes; ++m) {
    const double kappa = 1.0 + scale * rule.nodes[m];  // k / k0 at this node
    const double w = rule.weights[m];
    wsum += w;
    e_fd += w * std::polar(1.0, kappa * (s.chi_f - s.chi_d));
    e_f1 += w * std::polar(1.0, kappa * s.chi_f);
    e_d1 += w * std::polar(1.0, kappa * s.chi_d);
  }
  PathAverages out;
  out.t_d = s.transmission_d();
  out.t_f = s.transmission_f();
  const double ad = std::exp(-s.alpha_d);
  const double af = std::exp(-s.alpha_f);
  out.g_fd = (af * ad / wsum) * e_fd;
  out.g_f1 = (af / wsum) * e_f1;
  out.g_d1 = (ad / wsum) * e_d1;
  return out;
}

// Fast-phase samples: the crystal phase abar sqrt(1+y^2) mod 2pi is taken
// uniform over [0, 2pi) in the thick-plate limit.
struct PhaseTable {
  std::vector<double> sin_x, cos_x;
};

PhaseTable tabulate_phases(int samples) {
  PhaseTable t;
  t.sin_x.resize(samples);
  t.cos_x.resize(samples);
  for (int m = 0; m < samples; ++m) {
    const double x = 2.0 * kPi * (m + 0.5) / samples;
    t.sin_x[m] = std::sin(x);
    t.cos_x[m] = std::cos(x);
  }
  return t;
}

}  // namespace

double k0_oracle(const LoopSettings& s, const Spectrum& spec,
                 const QuadratureConfig& q) {
  q.validate();
  beamline::validate(s);
  check_spectrum(spec);
  const PathAverages k = k_average_factors(s, spec, q.k_nodes);
  const PhaseTable ph = tabulate_phases(q.phase_samples);

  // All three forward paths share the crystal product v0^2 vG v0', so the
  // (x, y) average of its modulus square factorizes from the bracket.
  // Midpoint rule in t with y = tan t; sin t and cos t carry the envelope
  // (y / sqrt(1+y^2) = sin t, 1 / sqrt(1+y^2) = cos t).
  const double h = kPi / q.y_nodes;
  double acc = 0.0;
  for (int j = 0; j < q.y_nodes; ++j) {
    const double t = -0.5 * kPi + (j + 0.5) * h;
    const double st = std::sin(t);
    const double ct = std::cos(t);
    const double jac = 1.0 / (ct * ct);  // dy = dt / cos^2 t
    double row = 0.0;
    for (int m = 0; m < q.phase_samples; ++m) {
      const std::complex<double> v0{ph.cos_x[m], ph.sin_x[m] * st};
      const std::complex<double> vg{0.0, -ph.sin_x[m] * ct};
      row += std::norm(v0 * v0 * vg * vg);  // v0'(y) = vG(-y) = vG(y) here
    }
    acc += row * jac;
  }
  acc *= h / q.phase_samples;

  const double bracket =
      1.0 + k.t_d + k.t_f + 2.0 * (k.g_fd + k.g_f1 + k.g_d1).real();
  return acc * bracket;
}

double kg_oracle(const LoopSettings& s, const Spectrum& spec,
                 const QuadratureConfig& q) {
  q.validate();
  beamline::validate(s);
  check_spectrum(spec);
  const PathAverages k = k_average_factors(s, spec, q.k_nodes);
  const PhaseTable ph = tabulate_phases(q.phase_samples);

  // The diffracted branch weights differ per path: W_f = v0 vG v0 vG' and
  // W_d = W_1 = v0 vG vG v0'. The spectral average of |psi_G|^2 is then a
  // quadratic form in the (x, y)-averaged weight products.
  const double h = kPi / q.y_nodes;
  double s_ff = 0.0, s_dd = 0.0;
  std::complex<double> s_fd{};
  for (int j = 0; j < q.y_nodes; ++j) {
    const double t = -0.5 * kPi + (j + 0.5) * h;
    const double st = std::sin(t);
    const double ct = std::cos(t);
    const double jac = 1.0 / (ct * ct);
    double row_ff = 0.0, row_dd = 0.0;
    std::complex<double> row_fd{};
    for (int m = 0; m < q.phase_samples; ++m) {
      const std::complex<double> v0{ph.cos_x[m], ph.sin_x[m] * st};
      const std::complex<double> vg{0.0, -ph.sin_x[m] * ct};
      const std::complex<double> v0m{ph.cos_x[m], -ph.sin_x[m] * st};  // v0(-y)
      const std::complex<double> w_f = v0 * vg * v0 * v0m;  // vG'(y) = v0(-y)
      const std::complex<double> w_d = v0 * vg * vg * vg;   // v0'(y) = vG(-y)
      row_ff += std::norm(w_f);
      row_dd += std::norm(w_d);
      row_fd += w_f * std::conj(w_d);
    }
    s_ff += row_ff * jac;
    s_dd += row_dd * jac;
    s_fd += row_fd * jac;
  }
  const double scale = h / q.phase_samples;
  s_ff *= scale;
  s_dd *= scale;
  s_fd *= scale;

  return s_ff * k.t_f + s_dd * (1.0 + k.t_d) +
         2.0 * (s_fd * (k.g_fd + k.g_f1)).real() + 2.0 * s_dd * k.g_d1.real();
}

}  // namespace dloop::intensity
