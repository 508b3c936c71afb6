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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "dloop/intensity.hpp"
#include "dloop/quadrature.hpp"
#include "dloop/visibility.hpp"

using namespace dloop;
using namespace dloop::visibility;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr auto kSto = AbsorptionMode::stochastic;
constexpr auto kDet = AbsorptionMode::deterministic;

double rel(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300});
}

double circ(double a, double b) {
  double d = std::fabs(a - b);
  d = std::fmod(d, 2 * kPi);
  return std::min(d, 2 * kPi - d);
}

class Uniform01 {
 public:
  explicit Uniform01(std::uint64_t seed) : rng_(seed) {}
  double operator()() { return std::ldexp(double(rng_() >> 11), -53); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

TEST_CASE("visibility from extrema") {
  CHECK(visibility_from_extrema(1.0, 0.0) == 1.0);
  CHECK(visibility_from_extrema(3.7, 3.7) == 0.0);
  CHECK(visibility_from_extrema(9.0, 1.0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(visibility_from_extrema(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(visibility_from_extrema(1.0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(visibility_from_extrema(0.0, 0.0), undefined_fringe_error);
}

TEST_CASE("single-loop visibility") {
  CHECK(visibility_single(1.0, kSto) == 1.0);
  CHECK(visibility_single(0.25, kSto) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(visibility_single(0.25, kDet) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK_THROWS_AS(visibility_single(-0.1, kSto), std::domain_error);
  CHECK_THROWS_AS(visibility_single(1.1, kSto), std::domain_error);
}

TEST_CASE("double-loop visibility") {
  CHECK(visibility_double(1.0, kSto) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(visibility_double(0.0, kSto) == 0.0);
  CHECK(visibility_double(0.0, kDet) == 0.0);
  CHECK(visibility_double(0.25, kSto) == doctest::Approx(4.0 * 0.5 / 4.25).epsilon(1e-15));
}

TEST_CASE("monochromatic fringe values") {
  CHECK(k0_monochromatic(0.0, 0.0, 1.0) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(k0_monochromatic(kPi, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  for (double chi_d : {0.0, 0.9, 2.7, 5.5}) {
    // half-turn phase in (f) flattens the fringe to T_d
    CHECK(k0_monochromatic(chi_d, kPi, 0.37) == doctest::Approx(0.37).epsilon(1e-12));
  }
}

TEST_CASE("fringe extrema: empty device") {
  const auto e = k0_extrema(0.0, 1.0);
  CHECK(e.i_max == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(e.i_min == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e.chi_at_max == 0.0);
  CHECK(e.chi_at_min == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("fringe extrema: flat at chi_f = pi") {
  const auto e = k0_extrema(kPi, 0.42);
  CHECK(e.i_max == doctest::Approx(0.42).epsilon(1e-12));
  CHECK(e.i_min == doctest::Approx(0.42).epsilon(1e-12));
}

TEST_CASE("fringe extrema: matched transmission zeroes the minimum") {
  const double t_d = 0.3;
  const double chi = solve_unit_visibility_phase(t_d);
  const auto e = k0_extrema(chi, t_d);
  CHECK(std::fabs(e.i_min) < 1e-14);
  CHECK(e.i_max == doctest::Approx(4.0 * t_d).epsilon(1e-12));
}

TEST_CASE("fringe extrema interchange past chi_f = pi") {
  const double chi_f = 4.0;  // second half-period
  const auto e = k0_extrema(chi_f, 0.6);
  CHECK(e.i_max >= e.i_min);
  CHECK(e.chi_at_max == doctest::Approx(0.5 * chi_f + kPi).epsilon(1e-12));
  CHECK(e.chi_at_min == doctest::Approx(0.5 * chi_f).epsilon(1e-12));
  // cross-check against a dense scan of the fringe itself
  double lo = kInf, hi = -kInf;
  for (int i = 0; i < 20000; ++i) {
    const double v = k0_monochromatic(2 * kPi * i / 20000.0, chi_f, 0.6);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(e.i_max == doctest::Approx(hi).epsilon(1e-6));
  CHECK(e.i_min == doctest::Approx(lo).epsilon(1e-4));
}

TEST_CASE("second-loop-phase visibility reduces to the plain double-loop value") {
  for (double t = 0.05; t <= 1.0; t += 0.05) {
    CHECK(visibility_double_phase(t, 0.0, kSto, 0.0) ==
          doctest::Approx(visibility_double(t, kSto)).epsilon(1e-14));
    CHECK(visibility_double_phase(t, 0.0, kDet, 0.0) ==
          doctest::Approx(visibility_double(t, kDet)).epsilon(1e-14));
  }
}

TEST_CASE("second-loop phase 2pi/3 turns the double loop into a single loop") {
  for (double t = 0.05; t <= 1.0; t += 0.05) {
    CHECK(rel(visibility_double_phase(t, 2 * kPi / 3, kSto, 0.0),
              visibility_single(t, kSto)) < 1e-12);
  }
}

TEST_CASE("matched transmission reaches unit visibility, stochastic only") {
  for (double t : {0.05, 0.1, 0.35, 0.7, 1.0}) {
    const double chi = solve_unit_visibility_phase(t);
    CHECK(visibility_double_phase(t, chi, kSto, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    if (t < 1.0) CHECK(visibility_double_phase(t, chi, kDet, 0.0) < 1.0);
  }
}

TEST_CASE("visibility bound with equality only at the matched point") {
  for (int i = 0; i <= 50; ++i) {
    const double t = i / 50.0;
    for (int j = 0; j <= 62; ++j) {
      const double chi = 2 * kPi * j / 62.0;
      const double c = std::fabs(std::cos(0.5 * chi));
      if (4 * c * c + t <= 1e-30) continue;  // dark device, contrast undefined
      const double v = visibility_double_phase(t, chi, kSto, 0.0);
      CHECK(v <= 1.0);
      CHECK(v >= 0.0);
      if (std::fabs(t - 4 * c * c) > 1e-3) CHECK(v < 1.0 - 1e-8);
    }
  }
}

TEST_CASE("deterministic ceiling below one for t_d < 1") {
  for (int i = 1; i < 1000; ++i) {
    const double t = i / 1000.0;
    for (double chi : {0.0, 0.8, 1.9, 2.6}) {
      CHECK(visibility_double_phase(t, chi, kDet, 0.0) <= std::sqrt(t) + 1e-15);
      CHECK(visibility_double_phase(t, chi, kDet, 0.0) < 1.0);
    }
  }
}

TEST_CASE("visibility orderings across the transmission range") {
  for (int i = 1; i < 1000; ++i) {
    const double t = i / 1000.0;
    CHECK(visibility_single(t, kSto) > visibility_double(t, kSto));
    CHECK(visibility_single(t, kDet) > visibility_double(t, kDet));
    CHECK(visibility_single(t, kSto) > visibility_single(t, kDet));
    CHECK(visibility_double(t, kSto) > visibility_double(t, kDet));
  }
  CHECK(visibility_single(0.0, kSto) == visibility_single(0.0, kDet));
  CHECK(visibility_single(1.0, kSto) == visibility_single(1.0, kDet));
}

TEST_CASE("background degrades the visibility monotonically") {
  const double t = 0.4;
  const double chi = 1.3;
  const double base = visibility_double_phase(t, chi, kSto, 0.0);
  CHECK(base == visibility_double_phase(t, chi, kSto));  // exact recovery
  double prev = base;
  for (double bg = 0.05; bg <= 1.0; bg += 0.05) {
    const double v = visibility_double_phase(t, chi, kSto, bg);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("background-degraded visibility at the matched working point") {
  const double t = 0.1;
  const double chi = solve_unit_visibility_phase(t);
  CHECK(chi == doctest::Approx(2.824).epsilon(2e-4));
  // 4 c^2 = T there, so V = 2T / (2T + I)
  CHECK(visibility_double_phase(t, chi, kSto, 0.1) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("undefined fringe: dark device with zero background") {
  CHECK_THROWS_AS(visibility_double_phase(0.0, kPi, kSto, 0.0), undefined_fringe_error);
  CHECK_THROWS_AS(visibility_double_phase(0.4, 1.0, kSto, -0.1), std::domain_error);
}

TEST_CASE("balance absorber: empty loop A") {
  const double a = solve_balance_absorber(0.0, 0.0, 0.01);
  CHECK(a == doctest::Approx(-0.5 * std::log(28.0 / 169.0)).epsilon(1e-14));
  CHECK(a == doctest::Approx(0.8988).epsilon(6e-5));
  // bandwidth is inert at chi_d = 0
  CHECK(solve_balance_absorber(0.0, 0.0, 0.05) == a);
}

TEST_CASE("balance absorber: opaque beam (d)") {
  const double a = solve_balance_absorber(kInf, 1.0, 0.01);
  CHECK(a == doctest::Approx(0.5 * std::log(169.0 / 7.0)).epsilon(1e-14));
  CHECK(a == doctest::Approx(1.5919).epsilon(1e-4));
}

TEST_CASE("balance absorber: destructive loop A has no solution") {
  CHECK_THROWS_AS(solve_balance_absorber(0.0, kPi, 0.0), unbounded_absorption_error);
  CHECK_THROWS_AS(solve_balance_absorber(-0.5, 0.0, 0.0), std::domain_error);
}

TEST_CASE("balance closure: solved absorption equalizes the averaged levels") {
  Uniform01 uni(2026);
  for (int i = 0; i < 12; ++i) {
    const double alpha_d = 2.0 * uni();
    const double chi_d = 2 * kPi * uni();
    const double pick = uni();
    const double eps = pick < 1.0 / 3 ? 0.0 : (pick < 2.0 / 3 ? 0.01 : 0.05);
    const double alpha_f = solve_balance_absorber(alpha_d, chi_d, eps);
    const intensity::Spectrum spec{eps};
    const auto mean_of = [&](auto&& f) {
      return quad::trapezoid_mean(f, -256 * kPi, 256 * kPi, 16384);
    };
    const double m0 = mean_of([&](double chi_f) {
      return intensity::k0_closed({chi_d, chi_f, alpha_d, alpha_f}, spec);
    });
    const double mg = mean_of([&](double chi_f) {
      return intensity::kg_closed({chi_d, chi_f, alpha_d, alpha_f}, spec);
    });
    CHECK(rel(m0, mg) < 1e-9);
    // the monochromatic case closes over a single period already
    if (eps == 0.0) {
      const double p0 = quad::periodic_mean([&](double chi_f) {
        return intensity::k0_closed({chi_d, chi_f, alpha_d, alpha_f}, spec);
      }, 2 * kPi, 4096);
      const double pg = quad::periodic_mean([&](double chi_f) {
        return intensity::kg_closed({chi_d, chi_f, alpha_d, alpha_f}, spec);
      }, 2 * kPi, 4096);
      CHECK(rel(p0, pg) < 1e-12);
    }
  }
}

TEST_CASE("unit-visibility phase: endpoints and worked value") {
  CHECK(solve_unit_visibility_phase(0.1) == doctest::Approx(2.824).epsilon(2e-4));
  CHECK(solve_unit_visibility_phase(0.1) ==
        doctest::Approx(2.0 * std::acos(0.5 * std::sqrt(0.1))).epsilon(1e-15));
  CHECK(solve_unit_visibility_phase(1.0) == doctest::Approx(2 * kPi / 3).epsilon(1e-14));
  CHECK(solve_unit_visibility_phase(0.0) == kPi);
  CHECK_THROWS_AS(solve_unit_visibility_phase(1.5), std::domain_error);
  CHECK_THROWS_AS(solve_unit_visibility_phase(-0.1), std::domain_error);
  for (double t : {0.01, 0.2, 0.8, 1.0}) {
    const double chi = solve_unit_visibility_phase(t);
    CHECK(chi >= 2 * kPi / 3 - 1e-15);
    CHECK(chi <= kPi);
  }
}

TEST_CASE("numeric fringe scan: unit visibility at the matched point") {
  const auto r = visibility_numeric(2.824, 0.1, 0.0, false);
  CHECK(r.value >= 0.999999);
  CHECK(k0_monochromatic(r.argmin_chi_d, 2.824, 0.1) <= 1e-6);
  CHECK(circ(r.argmax_chi_d, 0.5 * 2.824) < 1e-8);
}

TEST_CASE("numeric fringe scan: empty device endpoint") {
  const auto r = visibility_numeric(0.0, 1.0, 0.0, false);
  CHECK(r.value == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(circ(r.argmax_chi_d, 0.0) < 1e-8);
  CHECK(circ(r.argmin_chi_d, kPi) < 1e-8);
}

TEST_CASE("numeric fringe scan agrees with the closed formula on both routes") {
  const double expected = visibility_double_phase(0.5, 1.0, kSto, 0.0);
  const auto mono = visibility_numeric(1.0, 0.5, 0.0, false);
  CHECK(std::fabs(mono.value - expected) < 1e-9);
  const auto full = visibility_numeric(1.0, 0.5, 0.0, true);
  CHECK(std::fabs(full.value - expected) < 1e-9);
  // finite bandwidth damps the scanned contrast
  const auto damped = visibility_numeric(1.0, 0.5, 0.01, true);
  CHECK(damped.value < full.value);
}

TEST_CASE("numeric fringe scan: flat fringe convention") {
  const auto r = visibility_numeric(kPi, 0.42, 0.0, false);
  CHECK(r.value == 0.0);
  CHECK(r.argmax_chi_d == 0.0);
  CHECK(r.argmin_chi_d == 0.0);
}

TEST_CASE("numeric fringe scan matches the formula across the phase range") {
  for (double chi_f : {0.0, 0.4, 0.8, 1.2, 1.6, 2.0, 2.4, 2.8}) {
    for (double t : {0.1, 0.5, 0.9}) {
      const auto r = visibility_numeric(chi_f, t, 0.0, false);
      const double formula = visibility_double_phase(t, chi_f, kSto, 0.0);
      CHECK(std::fabs(r.value - formula) < 1e-9);
      CHECK(circ(r.argmax_chi_d, 0.5 * chi_f) < 1e-8);
    }
  }
}
