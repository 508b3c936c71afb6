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

#include <cstdint>
#include <string>
#include <vector>

#include "dloop/intensity.hpp"

namespace dloop::verify {

inline constexpr std::uint64_t kDefaultSeed = 123456789;

struct VerifyOptions {
  double tolerance = 1e-5;  // bound for the numeric-equivalence checks
  int samples = 100;        // random settings for the oracle comparison
  std::uint64_t seed = kDefaultSeed;
  intensity::QuadratureConfig quadrature{};
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double worst_rel_error = 0.0;
  double bound = 0.0;
  int cases = 0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
};

// Runs the oracle-equivalence and invariant suites: closed-form constants,
// single-path limits, brute-force vs closed-form intensities over seeded
// random settings, quadrature moment identities, the monochromatic
// reduction, the visibility scan cross-check and the balance closure.
// Deterministic for a fixed seed and configuration.
VerifyReport run_verification(const VerifyOptions& opts = {});

// One line per check with the worst-case relative error, plus a summary.
std::string format_report(const VerifyReport& report, const VerifyOptions& opts);
std::string report_to_json(const VerifyReport& report, const VerifyOptions& opts);

}  // namespace dloop::verify
