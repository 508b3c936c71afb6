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

#include "dloop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include <json.hpp>

#include "dloop/quadrature.hpp"
#include "dloop/visibility.hpp"

namespace dloop::verify {

using beamline::LoopSettings;
using intensity::Spectrum;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_diff(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

// Seeded uniform stream with platform-independent output.
class Uniform01 {
 public:
  explicit Uniform01(std::uint64_t seed) : rng_(seed) {}
  double next() { return std::ldexp(static_cast<double>(rng_() >> 11), -53); }

 private:
  std::mt19937_64 rng_;
};

LoopSettings random_settings(Uniform01& u) {
  LoopSettings s;
  s.chi_d = 2.0 * kPi * u.next();
  s.chi_f = 2.0 * kPi * u.next();
  s.alpha_d = u.next() < 0.125 ? kInf : 3.0 * u.next();
  s.alpha_f = u.next() < 0.125 ? kInf : 3.0 * u.next();
  return s;
}

double random_epsilon(Uniform01& u) {
  const double pick = u.next();
  if (pick < 1.0 / 3.0) return 0.0;
  if (pick < 2.0 / 3.0) return 0.01;
  return 0.05;
}

double circular_diff(double a, double b) {
  double d = std::fabs(a - b);
  d = std::fmod(d, 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& opts) {
  if (!(opts.tolerance > 0.0))
    throw std::invalid_argument("verify: tolerance must be positive");
  if (opts.samples < 1)
    throw std::invalid_argument("verify: need at least one sample");
  opts.quadrature.validate();

  VerifyReport rep;
  const auto add = [&](const char* name, double worst, double bound, int cases) {
    rep.checks.push_back({name, worst <= bound, worst, bound, cases});
  };

  const double k0_empty = 711.0 * kPi / 2048.0;
  const double kg_empty = 361.0 * kPi / 2048.0;
  const double k0_single = 79.0 * kPi / 2048.0;
  const double kg_single = 65.0 * kPi / 2048.0;

  // Closed forms against the empty-interferometer constants.
  {
    const LoopSettings s{};
    const Spectrum spec{0.0};
    const double worst = std::max(rel_diff(intensity::k0_closed(s, spec), k0_empty),
                                  rel_diff(intensity::kg_closed(s, spec), kg_empty));
    add("closed-form-constants", worst, 1e-12, 2);
  }

  // Single-path limit (both loop beams closed).
  {
    const LoopSettings s{0.0, 0.0, kInf, kInf};
    const Spectrum spec{0.01};
    const double worst_closed =
        std::max(rel_diff(intensity::k0_closed(s, spec), k0_single),
                 rel_diff(intensity::kg_closed(s, spec), kg_single));
    add("single-path-closed", worst_closed, 1e-12, 2);
    const double worst_oracle =
        std::max(rel_diff(intensity::k0_oracle(s, spec, opts.quadrature), k0_single),
                 rel_diff(intensity::kg_oracle(s, spec, opts.quadrature), kg_single));
    add("single-path-oracle", worst_oracle, opts.tolerance, 2);
  }

  // Brute-force average against the closed forms over random settings.
  {
    Uniform01 u(opts.seed);
    double worst_k0 = 0.0, worst_kg = 0.0;
    for (int i = 0; i < opts.samples; ++i) {
      const LoopSettings s = i == 0 ? LoopSettings{0.0, 0.0, kInf, kInf}
                                    : random_settings(u);
      const Spectrum spec{i == 0 ? 0.01 : random_epsilon(u)};
      worst_k0 = std::max(worst_k0, rel_diff(intensity::k0_oracle(s, spec, opts.quadrature),
                                             intensity::k0_closed(s, spec)));
      worst_kg = std::max(worst_kg, rel_diff(intensity::kg_oracle(s, spec, opts.quadrature),
                                             intensity::kg_closed(s, spec)));
    }
    add("oracle-vs-closed-k0", worst_k0, opts.tolerance, opts.samples);
    add("oracle-vs-closed-kg", worst_kg, opts.tolerance, opts.samples);
  }

  // Moments of the tan-substituted y rule: integrals of (1+y^2)^{-n}.
  {
    const double targets[3] = {kPi / 2.0, 3.0 * kPi / 8.0, 5.0 * kPi / 16.0};
    double worst = 0.0;
    double moments[3];
    for (int n = 2; n <= 4; ++n) {
      moments[n - 2] = quad::integrate_real_line(
          [n](double y) { return std::pow(1.0 + y * y, -n); }, opts.quadrature.y_nodes);
      worst = std::max(worst, rel_diff(moments[n - 2], targets[n - 2]));
    }
    // The same moments and the sin-power means rebuild the forward scale.
    const double rebuilt = intensity::mean_sin_power(2) * moments[0] -
                           2.0 * intensity::mean_sin_power(3) * moments[1] +
                           intensity::mean_sin_power(4) * moments[2];
    worst = std::max(worst, rel_diff(rebuilt, 79.0 * kPi / 2048.0));
    add("tan-rule-moments", worst, 1e-12, 4);
  }

  // Uniform fast-phase sampling reproduces the sin-power means.
  {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
      double mean = 0.0;
      for (int m = 0; m < opts.quadrature.phase_samples; ++m) {
        const double x = 2.0 * kPi * (m + 0.5) / opts.quadrature.phase_samples;
        mean += std::pow(std::sin(x), 2.0 * n);
      }
      mean /= opts.quadrature.phase_samples;
      worst = std::max(worst, rel_diff(mean, intensity::mean_sin_power(n)));
    }
    add("phase-sampling-moments", worst, 1e-12, 4);
  }

  // Monochromatic reduction: K0 at eps = 0 equals the single-path constant
  // times the squared modulus of the three-path bracket.
  {
    Uniform01 u(opts.seed + 1);
    double worst = 0.0;
    const int cases = std::max(8, opts.samples / 4);
    for (int i = 0; i < cases; ++i) {
      const LoopSettings s = random_settings(u);
      const ComplexAmp bracket = beamline::path_factor(s.chi_f, s.alpha_f) +
                                 beamline::path_factor(s.chi_d, s.alpha_d) + 1.0;
      worst = std::max(worst, rel_diff(intensity::k0_closed(s, Spectrum{0.0}),
                                       k0_single * std::norm(bracket)));
    }
    add("monochromatic-reduction", worst, 1e-12, cases);
  }

  // Fringe scan against the closed visibility formula.
  {
    double worst = 0.0;
    int cases = 0;
    for (double chi_f : {0.0, 0.6, 1.2, 1.8, 2.4, 3.0}) {
      for (double td : {0.1, 0.55, 1.0}) {
        const auto scan = visibility::visibility_numeric(chi_f, td, 0.0, false);
        const double formula = visibility::visibility_double_phase(
            td, chi_f, visibility::AbsorptionMode::stochastic, 0.0);
        worst = std::max(worst, std::fabs(scan.value - formula));
        worst = std::max(worst, circular_diff(scan.argmax_chi_d, 0.5 * chi_f));
        ++cases;
      }
    }
    add("visibility-scan", worst, std::max(opts.tolerance, 1e-8), cases);
  }

  // Balance closure: the solved alpha_f equalizes the chi_f-averaged
  // intensities. The average spans the full damped fringe extent,
  // symmetric so that no endpoint survives the spectral decay.
  {
    Uniform01 u(opts.seed + 2);
    double worst = 0.0;
    const int cases = 12;
    for (int i = 0; i < cases; ++i) {
      const double alpha_d = 2.0 * u.next();
      const double chi_d = 2.0 * kPi * u.next();
      const double eps = random_epsilon(u);
      const double alpha_f = visibility::solve_balance_absorber(alpha_d, chi_d, eps);
      const Spectrum spec{eps};
      const auto mean_of = [&](auto&& f) {
        return quad::trapezoid_mean(f, -256.0 * kPi, 256.0 * kPi, 16384);
      };
      const double m0 = mean_of([&](double chi_f) {
        return intensity::k0_closed({chi_d, chi_f, alpha_d, alpha_f}, spec);
      });
      const double mg = mean_of([&](double chi_f) {
        return intensity::kg_closed({chi_d, chi_f, alpha_d, alpha_f}, spec);
      });
      worst = std::max(worst, rel_diff(m0, mg));
    }
    add("balance-closure", worst, opts.tolerance, cases);
  }

  return rep;
}

std::string format_report(const VerifyReport& report, const VerifyOptions& opts) {
  std::string out;
  char line[160];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%s %-26s worst_rel=%-11.3e bound=%-9.1e cases=%d\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.worst_rel_error,
                  c.bound, c.cases);
    out += line;
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed ? 1 : 0;
  std::snprintf(line, sizeof line,
                "verify: %zu/%zu checks passed (tol=%g, samples=%d, seed=%llu)\n",
                passed, report.checks.size(), opts.tolerance, opts.samples,
                static_cast<unsigned long long>(opts.seed));
  out += line;
  return out;
}

std::string report_to_json(const VerifyReport& report, const VerifyOptions& opts) {
  nlohmann::ordered_json j;
  j["tolerance"] = opts.tolerance;
  j["samples"] = opts.samples;
  j["seed"] = opts.seed;
  j["all_passed"] = report.all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["worst_rel_error"] = c.worst_rel_error;
    jc["bound"] = c.bound;
    jc["cases"] = c.cases;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

}  // namespace dloop::verify
