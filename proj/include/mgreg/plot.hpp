/*
 * Copyright 2026 The mgreg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Staircase pictures of two-dimensional regions clipped to a window.

#ifndef MGREG_PLOT_HPP_
#define MGREG_PLOT_HPP_

#include <iomanip>
#include <sstream>
#include <string>

#include "mgreg/cohom.hpp"
#include "mgreg/error.hpp"
#include "mgreg/regions.hpp"

namespace mgreg::plot {

inline void require_plane(const Region& region, const Window& window) {
  if (region.dim() != 2 || window.dim() != 2) throw Unsupported("plots are only drawn for n = 2");
}

/// Rows from hi down to lo in the second coordinate. '#' marks a corner,
/// '*' another member, '.' a non-member.
inline std::string ascii(const Region& region, const Window& window) {
  require_plane(region, window);
  std::ostringstream out;
  for (Coord y = window.hi[1]; y >= window.lo[1]; --y) {
    out << std::setw(4) << y << " |";
    for (Coord x = window.lo[0]; x <= window.hi[0]; ++x) {
      MultiDegree m{x, y};
      bool corner = false;
      for (const auto& c : region.corners()) corner = corner || c == m;
      out << "  " << (corner ? '#' : region_contains(region, m) ? '*' : '.');
    }
    out << '\n';
  }
  out << "     +" << std::string(static_cast<std::size_t>(3 * (window.hi[0] - window.lo[0] + 1)), '-') << '\n';
  out << "      ";
  for (Coord x = window.lo[0]; x <= window.hi[0]; ++x) out << std::setw(3) << x;
  out << '\n';
  return out.str();
}

/// SVG with one square per lattice point of the window, shaded when the
/// point lies in the region, and a circle on every corner inside the window.
/// Corner circles carry class="corner" and data-m="x,y".
inline std::string svg(const Region& region, const Window& window, const std::string& title = "") {
  require_plane(region, window);
  const Coord cell = 28, margin = 36;
  const Coord w = window.hi[0] - window.lo[0] + 1, h = window.hi[1] - window.lo[1] + 1;
  const Coord width = 2 * margin + w * cell, height = 2 * margin + h * cell;
  auto px = [&](Coord x) { return margin + (x - window.lo[0]) * cell + cell / 2; };
  auto py = [&](Coord y) { return margin + (window.hi[1] - y) * cell + cell / 2; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!title.empty()) out << "  <title>" << title << "</title>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (Coord y = window.lo[1]; y <= window.hi[1]; ++y) {
    for (Coord x = window.lo[0]; x <= window.hi[0]; ++x) {
      const bool in = region_contains(region, MultiDegree{x, y});
      out << "  <rect class=\"" << (in ? "member" : "cell") << "\" x=\"" << px(x) - cell / 2 << "\" y=\""
          << py(y) - cell / 2 << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
          << (in ? "#9ecae1" : "#f7f7f7") << "\" stroke=\"#cccccc\"/>\n";
    }
  }
  for (Coord x = window.lo[0]; x <= window.hi[0]; ++x) {
    out << "  <text x=\"" << px(x) << "\" y=\"" << height - margin / 3 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << x << "</text>\n";
  }
  for (Coord y = window.lo[1]; y <= window.hi[1]; ++y) {
    out << "  <text x=\"" << margin / 2 << "\" y=\"" << py(y) + 4 << "\" font-size=\"11\" text-anchor=\"middle\">" << y
        << "</text>\n";
  }
  for (const auto& c : region.corners()) {
    if (!window.contains(c)) continue;
    out << "  <circle class=\"corner\" data-m=\"" << c[0] << ',' << c[1] << "\" cx=\"" << px(c[0]) << "\" cy=\""
        << py(c[1]) << "\" r=\"7\" fill=\"#08519c\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace mgreg::plot

#endif  // MGREG_PLOT_HPP_
