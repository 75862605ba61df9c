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

#include <optional>
#include <string>
#include <vector>

#include "pairwave/model.hpp"
#include "pairwave/types.hpp"

namespace pairwave {

// One sweep dimension: the parameter varied and its grid values.
struct SweepAxis {
  enum class Param { c1, gcs_ratio, omega_mhz, n_max, dt_ps };

  Param param = Param::c1;
  std::vector<double> values;

  static SweepAxis linear(Param p, double lo, double hi, int count);
  static SweepAxis list(Param p, std::vector<double> values);
};

const char* param_name(SweepAxis::Param p);
SweepAxis::Param parse_param(const std::string& name);  // throws ConfigError

// Per-point parameter overrides applied on top of a base spec.  A c1 override
// re-solves the matching condition and rescales each mu_j to keep its ratio
// to g_j; an omega override re-ties the leakage amplitude when the base had
// Omega_fe == Omega.
struct PointOverrides {
  std::optional<double> c1;
  std::optional<double> gcs_ratio;
  std::optional<double> omega_mhz;
  std::optional<int> n_max;
  std::optional<double> dt_ps;
};

SystemSpec apply_overrides(const SystemSpec& base, const PointOverrides& o);

// One simulated grid point.  Fidelities are NaN when failed is set.
struct SweepRecord {
  double c1 = 0.0, c2 = 0.0;
  double omega_mhz = 0.0;
  double gcs_ratio = 0.0;
  double g1_mhz = 0.0, g2_mhz = 0.0;
  double mu1_mhz = 0.0, mu2_mhz = 0.0;
  double t_op_ns = 0.0;  // evolved time (the per-point operation time)
  double f_joint = 0.0;
  std::vector<double> f_pair;
  double trace_error = 0.0;
  double min_eig = 0.0;
  long steps = 0;
  double wall_seconds = 0.0;
  double herm_drift = 0.0;
  int rehermitizations = 0;
  Severity validity = Severity::pass;
  bool failed = false;
  std::string error;
};

// Evolve one parameter point for its operation time (or the base spec's
// override) and reduce to the resonator register.  Points whose hard
// validation fails throw ValidationFailure unless force is set.
SweepRecord run_point(const SystemSpec& base, const PointOverrides& overrides,
                      bool force = false);

// Cartesian sweep, row-major in the declared axis order (first axis
// outermost).  Points run independently on a bounded worker pool; output
// order and content are independent of the worker count.  A point that
// throws is recorded in-row as failed and the sweep continues.
std::vector<SweepRecord> sweep_grid(const SystemSpec& base,
                                    const std::vector<SweepAxis>& axes,
                                    int workers = 1, bool force = false);

struct OptimumResult {
  SweepRecord best;
  std::vector<SweepRecord> neighborhood;  // +-1 along each axis (grid form)
  std::size_t best_index = 0;
};

// Row with maximal F_joint among non-failed records; ties broken by smallest
// c1, then smallest omega_mhz, then lowest index.  The axes overload maps the
// flat table back onto the grid to collect the +-1 neighbors per axis; the
// table-only overload uses the flat +-1 neighbors.
OptimumResult find_optimum(const std::vector<SweepRecord>& table,
                           const std::vector<SweepAxis>& axes);
OptimumResult find_optimum(const std::vector<SweepRecord>& table);

}  // namespace pairwave
