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
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dloop::quad {

struct GaussHermiteRule {
  std::vector<double> nodes;    // roots of H_n, ascending
  std::vector<double> weights;  // sum equals sqrt(pi)
};

// Gauss-Hermite rule for integrals of e^{-t^2} f(t) over the real line.
// Nodes are found by sign-change scan plus Newton polish on the orthonormal
// Hermite recurrence, which keeps all intermediates O(1).
GaussHermiteRule gauss_hermite(int n);

// Integral of f over the real line via the substitution y = tan(t),
// midpoint rule in t on (-pi/2, pi/2). Exact to rounding whenever the
// substituted integrand is a trigonometric polynomial of degree < nodes,
// which covers the (1 + y^2)^{-n} decay of all integrands in this library.
template <class F>
double integrate_real_line(F&& f, int nodes) {
  if (nodes < 3) throw std::invalid_argument("integrate_real_line: need at least 3 nodes");
  const double h = std::numbers::pi / nodes;
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double t = -0.5 * std::numbers::pi + (j + 0.5) * h;
    const double y = std::tan(t);
    sum += f(y) * (1.0 + y * y);  // dy = (1 + y^2) dt
  }
  return sum * h;
}

// Mean of f over [0, period) on a uniform half-open grid.
template <class F>
double periodic_mean(F&& f, double period, int samples) {
  if (samples < 1) throw std::invalid_argument("periodic_mean: need at least 1 sample");
  const double h = period / samples;
  double sum = 0.0;
  for (int j = 0; j < samples; ++j) sum += f(j * h);
  return sum / samples;
}

// Trapezoid mean of f over [a, b] with the given number of intervals.
// Unlike the plain row mean this carries no O(h/L) endpoint bias, so it
// reads the level of a decaying fringe cleanly.
template <class F>
double trapezoid_mean(F&& f, double a, double b, int intervals) {
  if (intervals < 1) throw std::invalid_argument("trapezoid_mean: need at least 1 interval");
  if (!(b > a)) throw std::invalid_argument("trapezoid_mean: need b > a");
  const double h = (b - a) / intervals;
  double sum = 0.5 * (f(a) + f(b));
  for (int j = 1; j < intervals; ++j) sum += f(a + j * h);
  return sum / intervals;
}

// Golden-section search for the maximizer of a unimodal f on [a, b];
// returns the midpoint of the final bracket of width <= tol.
template <class F>
double golden_section_max(F&& f, double a, double b, double tol) {
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace dloop::quad
