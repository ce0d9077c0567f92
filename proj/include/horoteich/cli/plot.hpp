// Copyright 2026 The horoteich Authors
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

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "horoteich/kernel.hpp"
#include "horoteich/torus.hpp"

namespace horoteich::cli {

/// Horocycle {Ext(c) = level}: the line Im = 1/level for c = (1, 0), otherwise
/// the circle tangent to the real axis at -p/q with radius level / (2 q^2).
struct Horocycle {
  bool line = false;
  Rational center_x;
  Rational radius;  // or the height of the line
};

inline Horocycle horocycle(const torus::TorusCurve& c, const Rational& level) {
  if (!(level > 0)) throw InvalidInput("plot levels must be positive");
  if (c.q() == 0) return {true, Rational(0), 1 / level};
  const Rational q(c.q());
  return {false, Rational(-c.p()) / q, level / (2 * q * q)};
}

struct PlotWindow {
  double xmin = -2.0;
  double xmax = 2.0;
  double ymax = 3.0;
  int width = 800;
};

/// Static SVG of horocycles of one curve in the upper half plane.
inline std::string horocycle_svg(const torus::TorusCurve& c, const std::vector<Rational>& levels, const PlotWindow& w) {
  if (!(w.xmax > w.xmin) || !(w.ymax > 0.0)) throw InvalidInput("plot window must have xmax > xmin and ymax > 0");
  const double scale = w.width / (w.xmax - w.xmin);
  const int height = static_cast<int>(std::lround(w.ymax * scale));
  auto px = [&](double x) { return (x - w.xmin) * scale; };
  auto py = [&](double y) { return height - y * scale; };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w.width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << w.width << " " << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << height << "\" x2=\"" << w.width << "\" y2=\"" << height
     << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  os << "<text x=\"8\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">Ext(" << c.p() << "," << c.q()
     << ") level sets</text>\n";
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const Horocycle h = horocycle(c, levels[k]);
    const double hue = levels.size() > 1 ? 240.0 * static_cast<double>(k) / static_cast<double>(levels.size() - 1) : 0.0;
    const std::string stroke = "hsl(" + num(hue) + ",70%,40%)";
    if (h.line) {
      const double y = py(to_double(h.radius));
      os << "<line x1=\"0\" y1=\"" << num(y) << "\" x2=\"" << w.width << "\" y2=\"" << num(y) << "\" stroke=\""
         << stroke << "\" fill=\"none\" stroke-width=\"1.5\"/>\n";
    } else {
      const double r = to_double(h.radius);
      os << "<circle cx=\"" << num(px(to_double(h.center_x))) << "\" cy=\"" << num(py(r)) << "\" r=\""
         << num(r * scale) << "\" stroke=\"" << stroke << "\" fill=\"none\" stroke-width=\"1.5\"/>\n";
    }
    os << "<text x=\"" << w.width - 120 << "\" y=\"" << 20 + 16 * static_cast<int>(k + 1)
       << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << stroke << "\">level " << to_string(levels[k])
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace horoteich::cli
