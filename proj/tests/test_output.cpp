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

#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pairwave/csv.hpp"
#include "pairwave/svg.hpp"

using namespace pairwave;

namespace {

SweepRecord sample_record() {
  SweepRecord r;
  r.c1 = 11.0;
  r.c2 = 15.5;
  r.omega_mhz = 100.0;
  r.gcs_ratio = 0.4;
  r.g1_mhz = 68.75;
  r.g2_mhz = 96.25;
  r.mu1_mhz = 65.3125;
  r.mu2_mhz = 91.4375;
  r.t_op_ns = 40.25;
  r.f_joint = 0.984375;
  r.f_pair = {0.99, 0.9905};
  r.trace_error = 1e-9;
  r.min_eig = -2e-8;
  r.steps = 2420;
  r.wall_seconds = 1.5;
  return r;
}

SweepRecord cell(double f, bool failed = false) {
  SweepRecord r;
  r.f_joint = failed ? std::nan("") : f;
  r.f_pair = {f, f};
  r.failed = failed;
  return r;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("csv header and row formatting are exact") {
  const std::string expected_header =
      "c1,c2,omega_mhz,gcs_ratio,g1_mhz,g2_mhz,mu1_mhz,mu2_mhz,t_op_ns,"
      "F_joint,F_pair1,F_pair2,trace_error,min_eig,steps,wall_s\n";
  CHECK(to_csv({}) == expected_header);

  const std::string with_timing = to_csv({sample_record()}, true);
  CHECK(with_timing ==
        expected_header +
            "11,15.5,100,0.4,68.75,96.25,65.3125,91.4375,40.25,0.984375,"
            "0.99,0.9905,1e-09,-2e-08,2420,1.5\n");

  // Timing is suppressed by default so repeated runs are byte-identical.
  const std::string quiet = to_csv({sample_record()});
  CHECK(quiet ==
        expected_header +
            "11,15.5,100,0.4,68.75,96.25,65.3125,91.4375,40.25,0.984375,"
            "0.99,0.9905,1e-09,-2e-08,2420,0\n");

  SweepRecord failed = sample_record();
  failed.failed = true;
  failed.f_joint = std::nan("");
  const std::string with_failed = to_csv({sample_record(), failed});
  CHECK(count_occurrences(with_failed, "\n") == 3);
  CHECK(with_failed.find(",nan,") != std::string::npos);

  SweepRecord lopsided = sample_record();
  lopsided.f_pair = {0.5};
  CHECK_THROWS_AS(to_csv({lopsided}), std::invalid_argument);
}

TEST_CASE("heatmap renders one titled cell per grid point") {
  const std::vector<SweepAxis> axes = {
      SweepAxis::list(SweepAxis::Param::c1, {7.0, 9.0, 11.0}),
      SweepAxis::list(SweepAxis::Param::omega_mhz, {50.0, 100.0, 150.0, 200.0})};
  std::vector<SweepRecord> table;
  for (int i = 0; i < 12; ++i) table.push_back(cell(0.90 + 0.005 * i));
  table[5] = cell(0.0, /*failed=*/true);

  const std::string svg = heatmap_svg(table, axes);
  CHECK(svg.rfind("<svg xmlns=", 0) == 0);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  CHECK(count_occurrences(svg, "<title>") == 12);
  CHECK(count_occurrences(svg, "<title>failed</title>") == 1);
  CHECK(count_occurrences(svg, "#bbbbbb") == 1);
  // Extremes of the linear blue-to-red map.
  CHECK(svg.find("#ff3c00") != std::string::npos);   // best cell
  CHECK(svg.find("#003cff") != std::string::npos);   // worst cell
  // Axis names and tick labels are drawn.
  CHECK(svg.find(">c1<") != std::string::npos);
  CHECK(svg.find(">omega_mhz<") != std::string::npos);
  CHECK(svg.find(">150<") != std::string::npos);
  CHECK(svg.find(">F_joint<") != std::string::npos);

  CHECK(heatmap_svg(table, axes) == svg);  // deterministic

  CHECK_THROWS_AS(heatmap_svg(table, {axes[0]}), std::invalid_argument);
  table.pop_back();
  CHECK_THROWS_AS(heatmap_svg(table, axes), std::invalid_argument);
}

TEST_CASE("heatmap degrades gracefully when every cell failed") {
  const std::vector<SweepAxis> axes = {
      SweepAxis::list(SweepAxis::Param::c1, {1.0, 2.0}),
      SweepAxis::list(SweepAxis::Param::omega_mhz, {10.0, 20.0})};
  const std::vector<SweepRecord> table(4, cell(0.0, /*failed=*/true));
  const std::string svg = heatmap_svg(table, axes);
  CHECK(count_occurrences(svg, "#bbbbbb") == 4);
  CHECK(svg.find(">-<") != std::string::npos);  // blank color-bar labels
  CHECK(svg.find("nan") == std::string::npos);
}
