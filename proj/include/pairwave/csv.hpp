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

#include <string>
#include <vector>

#include "pairwave/sweep.hpp"

namespace pairwave {

// Renders sweep records as CSV with the fixed column set
//   c1,c2,omega_mhz,gcs_ratio,g1_mhz,g2_mhz,mu1_mhz,mu2_mhz,t_op_ns,
//   F_joint,F_pair1,F_pair2,trace_error,min_eig,steps,wall_s
// (9 significant digits, '\n' line endings, header row).  Requires
// two-pair records.  wall_s is written as 0 unless include_timing is set,
// which keeps repeated runs byte-identical.
std::string to_csv(const std::vector<SweepRecord>& rows,
                   bool include_timing = false);

}  // namespace pairwave
