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
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "horoteich/horolab/backend.hpp"
#include "horoteich/kernel.hpp"
#include "horoteich/torus.hpp"

namespace horoteich::horolab {

/// Teichmuller space of the torus as the upper half plane, with closed-form
/// extremal lengths.
class TorusBackend {
 public:
  using Point = UpperHalfPoint;
  using Foliation = torus::WeightedTorusFoliation;

  Bracket ext(const Point& x, const Foliation& f) const { return Bracket::around(torus::extremal_length(x, f)); }
  Rational intersect(const Foliation& f, const Foliation& g) const { return torus::intersection(f, g); }
  Foliation scale(const Foliation& f, const Rational& k) const { return Foliation(f.weight * k, f.curve); }
  std::size_t component_count(const Foliation&) const { return 1; }

  std::optional<std::vector<Rational>> sub_coefficients(const Foliation& g, const Foliation& f) const {
    if (!(g.curve == f.curve)) return std::nullopt;
    return std::vector<Rational>{g.weight / f.weight};
  }

  std::optional<Point> horosphere_point(const Foliation& f, const Rational& level, double s) const {
    return torus::horocycle_point(f.curve, to_double(level / (f.weight * f.weight)), s);
  }

  std::function<Point(double)> geodesic(const Foliation& f, const Foliation& g) const {
    const torus::TorusGeodesic geo(f.curve, g.curve);
    return [geo](double t) { return geo.at(t); };
  }

  Bracket distance(const Point& x, const Point& y) const { return widen(0.5 * hyperbolic_distance(x, y)); }

  Bracket ray_excess(const Point& x0, const Foliation& f, const Point& x, double t) const {
    return widen(torus::TorusRay(x0, f.curve).renormalized_distance(x, t));
  }

 private:
  static Bracket widen(double v) {
    const double e = 1e-13 * (1.0 + std::abs(v));
    return Bracket(v - e, v + e);
  }
};

static_assert(DistanceBackend<TorusBackend>);

}  // namespace horoteich::horolab
