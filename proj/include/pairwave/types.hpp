// Copyright 2026 The pairwave Authors
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

#include <Eigen/Dense>

namespace pairwave {

using Complex = std::complex<double>;

// Row-major storage so that the flattened basis index of HilbertLayout is the
// row index, and a matrix row is contiguous in memory.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr Complex kImag{0.0, 1.0};

// Internal unit system: angular frequency in rad/ns, time in ns, rates in
// 1/ns.  Human-facing inputs are ordinary frequencies (the value of omega/2pi)
// in GHz or MHz and lifetimes in microseconds; the conversion happens exactly
// once, through these helpers.
inline double ghz_to_angular(double f_ghz) { return kTwoPi * f_ghz; }
inline double mhz_to_angular(double f_mhz) { return kTwoPi * f_mhz * 1e-3; }
inline double angular_to_ghz(double w) { return w / kTwoPi; }
inline double angular_to_mhz(double w) { return w / kTwoPi * 1e3; }
// Lifetime tau in microseconds -> decay rate 1/tau in 1/ns.
inline double lifetime_us_to_rate(double tau_us) { return 1.0 / (1e3 * tau_us); }

// Thrown when an integration leaves the physically meaningful regime (norm or
// trace drift beyond tolerance).  The CLI maps it to exit code 2.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on malformed or unphysical configuration input.  Exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a simulation point fails hard validity checks and was not
// forced.  Exit code 1.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pairwave
