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

#include <complex>
#include <stdexcept>

namespace dloop {

// All wave amplitudes in this library are carried as std::complex<double>;
// intensities are modulus squares of these.
using ComplexAmp = std::complex<double>;

inline double modulus_squared(const ComplexAmp& a) { return std::norm(a); }

// Thrown when a fringe has no defined contrast (zero total intensity).
class undefined_fringe_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when the 50/50 balance condition would require infinite absorption
// (total destructive interference in the first loop).
class unbounded_absorption_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace dloop
