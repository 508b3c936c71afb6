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

#include "dloop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dloop::quad {

namespace {

// Orthonormal Hermite polynomial h_n(t) (weight e^{-t^2}) and h_{n-1}(t).
// Three-term recurrence keeps values O(1) even for large n.
std::pair<double, double> hermite_ortho(int n, double t) {
  double hm = 0.0;                                 // h_{-1}
  double h = std::pow(std::numbers::pi, -0.25);    // h_0
  for (int k = 0; k < n; ++k) {
    const double hp =
        t * std::sqrt(2.0 / (k + 1)) * h - std::sqrt(double(k) / (k + 1)) * hm;
    hm = h;
    h = hp;
  }
  return {h, hm};
}

}  // namespace

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: need at least 1 node");

  // All roots of H_n lie within +-sqrt(2n+1); scan finely enough to separate
  // adjacent roots (minimal spacing ~ pi / sqrt(2n+1)), then polish. The
  // scan grid is offset so it cannot land exactly on the symmetric root.
  const double bound = std::sqrt(2.0 * n + 1.0) + 1.0;
  const int grid = 80 * n;
  const double dt = 2.0 * bound / grid;
  const auto node_at = [&](int i) { return -bound + (i + 0.3183098) * dt; };

  std::vector<double> roots;
  roots.reserve(n);
  double prev_t = node_at(0);
  double prev_h = hermite_ortho(n, prev_t).first;
  for (int i = 1; i <= grid; ++i) {
    const double t = node_at(i);
    const double h = hermite_ortho(n, t).first;
    if ((prev_h < 0.0) != (h < 0.0)) {
      // bisect, then Newton with h_n' = sqrt(2n) h_{n-1}
      double a = prev_t, b = t, fa = prev_h;
      for (int it = 0; it < 40; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = hermite_ortho(n, m).first;
        if ((fa < 0.0) == (fm < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      double x = 0.5 * (a + b);
      for (int it = 0; it < 4; ++it) {
        const auto [hn, hnm1] = hermite_ortho(n, x);
        const double deriv = std::sqrt(2.0 * n) * hnm1;
        if (deriv == 0.0) break;
        x -= hn / deriv;
      }
      roots.push_back(x);
    }
    prev_t = t;
    prev_h = h;
  }
  if (static_cast<int>(roots.size()) != n)
    throw std::runtime_error("gauss_hermite: root scan failed");
  std::sort(roots.begin(), roots.end());

  GaussHermiteRule rule;
  rule.nodes = std::move(roots);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double hnm1 = hermite_ortho(n, rule.nodes[i]).second;
    rule.weights[i] = 1.0 / (n * hnm1 * hnm1);
  }
  return rule;
}

}  // namespace dloop::quad
