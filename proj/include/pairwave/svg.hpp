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

// Self-contained SVG heatmap of F_joint over a two-axis grid: one rect per
// grid cell with a linear color map, axis tick labels, and a color bar.
// Failed cells are drawn gray.  Output is deterministic for fixed input.
std::string heatmap_svg(const std::vector<SweepRecord>& table,
                        const std::vector<SweepAxis>& axes);

}  // namespace pairwave
