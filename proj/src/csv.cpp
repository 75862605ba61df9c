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

#include "pairwave/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace pairwave {
namespace {

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  out += buf;
}

}  // namespace

std::string to_csv(const std::vector<SweepRecord>& rows, bool include_timing) {
  std::string out =
      "c1,c2,omega_mhz,gcs_ratio,g1_mhz,g2_mhz,mu1_mhz,mu2_mhz,t_op_ns,"
      "F_joint,F_pair1,F_pair2,trace_error,min_eig,steps,wall_s\n";
  for (const SweepRecord& r : rows) {
    if (r.f_pair.size() != 2) {
      throw std::invalid_argument(
          "to_csv: the fixed column set requires two-pair records");
    }
    char buf[40];
    append_double(out, r.c1); out += ',';
    append_double(out, r.c2); out += ',';
    append_double(out, r.omega_mhz); out += ',';
    append_double(out, r.gcs_ratio); out += ',';
    append_double(out, r.g1_mhz); out += ',';
    append_double(out, r.g2_mhz); out += ',';
    append_double(out, r.mu1_mhz); out += ',';
    append_double(out, r.mu2_mhz); out += ',';
    append_double(out, r.t_op_ns); out += ',';
    append_double(out, r.f_joint); out += ',';
    append_double(out, r.f_pair[0]); out += ',';
    append_double(out, r.f_pair[1]); out += ',';
    append_double(out, r.trace_error); out += ',';
    append_double(out, r.min_eig); out += ',';
    std::snprintf(buf, sizeof buf, "%ld", r.steps);
    out += buf; out += ',';
    append_double(out, include_timing ? r.wall_seconds : 0.0);
    out += '\n';
  }
  return out;
}

}  // namespace pairwave
