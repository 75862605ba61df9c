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

#include "pairwave/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pairwave {
namespace {

std::string fmt(const char* pattern, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string color_of(double t) {
  // Linear blue -> red map on t in [0, 1].
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(255.0 * t));
  const int b = static_cast<int>(std::lround(255.0 * (1.0 - t)));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x3c%02x", r, b);
  return buf;
}

}  // namespace

std::string heatmap_svg(const std::vector<SweepRecord>& table,
                        const std::vector<SweepAxis>& axes) {
  if (axes.size() != 2) {
    throw std::invalid_argument("heatmap_svg: exactly two sweep axes required");
  }
  const std::size_t rows = axes[0].values.size();
  const std::size_t cols = axes[1].values.size();
  if (table.size() != rows * cols) {
    throw std::invalid_argument("heatmap_svg: table size does not match axes");
  }

  double lo = 0.0, hi = 0.0;
  bool seen = false;
  for (const SweepRecord& r : table) {
    if (r.failed || std::isnan(r.f_joint)) continue;
    if (!seen) {
      lo = hi = r.f_joint;
      seen = true;
    } else {
      lo = std::min(lo, r.f_joint);
      hi = std::max(hi, r.f_joint);
    }
  }

  const int cell_w = 28, cell_h = 22;
  const int left = 80, top = 24, bottom = 56, right = 100;
  const int plot_w = static_cast<int>(cols) * cell_w;
  const int plot_h = static_cast<int>(rows) * cell_h;
  const int width = left + plot_w + right;
  const int height = top + plot_h + bottom;

  std::string out;
  char head[160];
  std::snprintf(head, sizeof head,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" "
                "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                width, height, width, height);
  out += head;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const SweepRecord& r = table[i * cols + j];
      std::string fill = "#bbbbbb";
      if (!r.failed && !std::isnan(r.f_joint)) {
        const double t = hi > lo ? (r.f_joint - lo) / (hi - lo) : 0.5;
        fill = color_of(t);
      }
      char rect[192];
      std::snprintf(rect, sizeof rect,
                    "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" "
                    "fill=\"%s\"><title>%s</title></rect>\n",
                    left + static_cast<int>(j) * cell_w,
                    top + static_cast<int>(i) * cell_h, cell_w, cell_h,
                    fill.c_str(),
                    r.failed ? "failed" : fmt("%.6g", r.f_joint).c_str());
      out += rect;
    }
  }

  // Tick labels: one per row, and every other column when crowded.
  for (std::size_t i = 0; i < rows; ++i) {
    char label[160];
    std::snprintf(label, sizeof label,
                  "<text x=\"%d\" y=\"%d\" font-size=\"10\" "
                  "text-anchor=\"end\" font-family=\"sans-serif\">%s</text>\n",
                  left - 6, top + static_cast<int>(i) * cell_h + cell_h / 2 + 3,
                  fmt("%.4g", axes[0].values[i]).c_str());
    out += label;
  }
  const std::size_t col_step = cols > 12 ? 2 : 1;
  for (std::size_t j = 0; j < cols; j += col_step) {
    char label[160];
    std::snprintf(label, sizeof label,
                  "<text x=\"%d\" y=\"%d\" font-size=\"10\" "
                  "text-anchor=\"middle\" font-family=\"sans-serif\">%s</text>\n",
                  left + static_cast<int>(j) * cell_w + cell_w / 2,
                  top + plot_h + 14, fmt("%.4g", axes[1].values[j]).c_str());
    out += label;
  }

  // Axis names.
  char axis_label[256];
  std::snprintf(axis_label, sizeof axis_label,
                "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"middle\" "
                "font-family=\"sans-serif\">%s</text>\n",
                left + plot_w / 2, top + plot_h + 34, param_name(axes[1].param));
  out += axis_label;
  std::snprintf(axis_label, sizeof axis_label,
                "<text x=\"14\" y=\"%d\" font-size=\"12\" text-anchor=\"middle\" "
                "font-family=\"sans-serif\" transform=\"rotate(-90 14 %d)\">%s"
                "</text>\n",
                top + plot_h / 2, top + plot_h / 2, param_name(axes[0].param));
  out += axis_label;

  // Color bar with min/max labels.
  const int bar_x = left + plot_w + 24, bar_w = 14;
  const int bar_segments = 32;
  for (int sgm = 0; sgm < bar_segments; ++sgm) {
    const double t = 1.0 - (static_cast<double>(sgm) + 0.5) / bar_segments;
    const int y0 = top + sgm * plot_h / bar_segments;
    const int y1 = top + (sgm + 1) * plot_h / bar_segments;
    char rect[160];
    std::snprintf(rect, sizeof rect,
                  "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" "
                  "fill=\"%s\"/>\n",
                  bar_x, y0, bar_w, y1 - y0, color_of(t).c_str());
    out += rect;
  }
  char bar_label[192];
  std::snprintf(bar_label, sizeof bar_label,
                "<text x=\"%d\" y=\"%d\" font-size=\"10\" "
                "font-family=\"sans-serif\">%s</text>\n",
                bar_x + bar_w + 4, top + 8, seen ? fmt("%.6g", hi).c_str() : "-");
  out += bar_label;
  std::snprintf(bar_label, sizeof bar_label,
                "<text x=\"%d\" y=\"%d\" font-size=\"10\" "
                "font-family=\"sans-serif\">%s</text>\n",
                bar_x + bar_w + 4, top + plot_h, seen ? fmt("%.6g", lo).c_str() : "-");
  out += bar_label;
  std::snprintf(bar_label, sizeof bar_label,
                "<text x=\"%d\" y=\"14\" font-size=\"12\" "
                "font-family=\"sans-serif\">F_joint</text>\n",
                bar_x - 10);
  out += bar_label;

  out += "</svg>\n";
  return out;
}

}  // namespace pairwave
