// Copyright 2026 The gamble Authors
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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace gamble::svg {

namespace detail {

struct Table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
};

inline Table parse_csv(const std::string& csv) {
  Table t;
  std::istringstream in(csv);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      t.names = cells;
      t.columns.assign(cells.size(), {});
      have_header = true;
      continue;
    }
    for (std::size_t i = 0; i < cells.size() && i < t.columns.size(); ++i)
      t.columns[i].push_back(std::stod(cells[i]));
  }
  return t;
}

inline bool is_se_column(const std::string& name) {
  return name == "se" || name.rfind("se_", 0) == 0;
}

}  // namespace detail

/// Minimal static line plot of a figure CSV: first column is x, remaining
/// non-standard-error columns become polylines.
inline std::string line_plot_from_csv(const std::string& csv,
                                      const std::string& title) {
  const detail::Table t = detail::parse_csv(csv);
  const int w = 640, h = 420, m = 50;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title
     << "</text>\n";
  if (t.columns.empty() || t.columns[0].empty()) {
    os << "</svg>\n";
    return os.str();
  }
  const auto& xs = t.columns[0];
  double xmin = xs[0], xmax = xs[0], ymin = 0.0, ymax = 0.0;
  bool y_init = false;
  for (double x : xs) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  for (std::size_t c = 1; c < t.columns.size(); ++c) {
    if (detail::is_se_column(t.names[c])) continue;
    for (double y : t.columns[c]) {
      if (!y_init) {
        ymin = ymax = y;
        y_init = true;
      }
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (!y_init || ymax == ymin) ymax = ymin + 1.0;
  auto px = [&](double x) { return m + (x - xmin) / (xmax - xmin) * (w - 2 * m); };
  auto py = [&](double y) { return h - m - (y - ymin) / (ymax - ymin) * (h - 2 * m); };
  os << "<rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << w - 2 * m
     << "\" height=\"" << h - 2 * m << "\" fill=\"none\" stroke=\"black\"/>\n";
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b"};
  int color_idx = 0;
  for (std::size_t c = 1; c < t.columns.size(); ++c) {
    if (detail::is_se_column(t.names[c])) continue;
    os << "<polyline fill=\"none\" stroke=\"" << colors[color_idx % 6]
       << "\" points=\"";
    for (std::size_t i = 0; i < t.columns[c].size() && i < xs.size(); ++i)
      os << px(xs[i]) << "," << py(t.columns[c][i]) << " ";
    os << "\"/>\n";
    os << "<text x=\"" << w - m + 4 << "\" y=\"" << m + 16 * (color_idx + 1)
       << "\" font-size=\"10\" fill=\"" << colors[color_idx % 6] << "\">"
       << t.names[c] << "</text>\n";
    ++color_idx;
  }
  os << "<text x=\"" << m << "\" y=\"" << h - m + 16 << "\" font-size=\"10\">"
     << xmin << "</text>\n";
  os << "<text x=\"" << w - m << "\" y=\"" << h - m + 16
     << "\" font-size=\"10\" text-anchor=\"end\">" << xmax << "</text>\n";
  os << "<text x=\"" << m - 4 << "\" y=\"" << h - m
     << "\" font-size=\"10\" text-anchor=\"end\">" << ymin << "</text>\n";
  os << "<text x=\"" << m - 4 << "\" y=\"" << m + 10
     << "\" font-size=\"10\" text-anchor=\"end\">" << ymax << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace gamble::svg
