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
#include <utility>
#include <vector>

#include "horoteich/horolab/backend.hpp"
#include "horoteich/kernel.hpp"
#include "horoteich/origami.hpp"

namespace horoteich::horolab {

/// SL(2,R)-orbit of one origami. Extremal lengths are brackets; horosphere
/// points and rays are available for multiples of the canonical vertical or
/// horizontal foliation, whose extremal lengths are exact.
class OrigamiBackend {
 public:
  using Point = origami::MarkedFlatSurface<double>;
  using Foliation = origami::MulticurveFoliation;

  explicit OrigamiBackend(origami::Origami o) : surface_(std::move(o)) {}

  const origami::Origami& surface() const { return surface_; }
  Point base_point() const { return Point(surface_); }

  Bracket ext(const Point& x, const Foliation& f) const { return origami::ext_bracket(f, x).certified(); }
  Rational intersect(const Foliation& f, const Foliation& g) const { return origami::intersection(f, g); }
  Foliation scale(const Foliation& f, const Rational& k) const { return f.scaled(k); }
  std::size_t component_count(const Foliation& f) const { return f.components().size(); }

  std::optional<std::vector<Rational>> sub_coefficients(const Foliation& g, const Foliation& f) const {
    std::vector<Rational> a(f.components().size(), Rational(0));
    for (const auto& gc : g.components()) {
      bool found = false;
      for (std::size_t i = 0; i < f.components().size(); ++i) {
        if (f.components()[i].curve == gc.curve) {
          a[i] = gc.weight / f.components()[i].weight;
          found = true;
        }
      }
      if (!found) return std::nullopt;
    }
    return a;
  }

  /// f = c * (canonical foliation of its direction), if so.
  std::optional<Rational> canonical_multiple(const Foliation& f) const {
    const auto canon = origami::canonical_foliation(surface_, f.axis());
    if (canon.components().size() != f.components().size()) return std::nullopt;
    const auto a = sub_coefficients(f, canon);
    if (!a) return std::nullopt;
    for (const auto& ai : *a) {
      if (ai != a->front()) return std::nullopt;
    }
    return a->front();
  }

  /// g_t h^s (vertical) or g_t T^s (horizontal) with Ext(f) = level.
  std::optional<Point> horosphere_point(const Foliation& f, const Rational& level, double s) const {
    const auto c = canonical_multiple(f);
    if (!c) return std::nullopt;
    const double ratio = to_double(level / (*c * *c * Rational(surface_.n())));
    if (f.axis() == origami::Axis::Vertical) {
      return origami::geodesic_flow(origami::horocycle_flow(base_point(), s), -0.5 * std::log(ratio));
    }
    return Point(surface_, geodesic_matrix(0.5 * std::log(ratio)) * Mat2<double>{1.0, s, 0.0, 1.0});
  }

  /// Teichmuller geodesic of a vertical and a horizontal canonical multiple: g_t.
  std::function<Point(double)> geodesic(const Foliation& f, const Foliation& g) const {
    if (!canonical_multiple(f) || !canonical_multiple(g) || f.axis() == g.axis()) {
      throw InvalidInput("origami geodesics are available between the canonical vertical and horizontal foliations");
    }
    const Point x = base_point();
    const bool flip = f.axis() == origami::Axis::Horizontal;
    return [x, flip](double t) { return origami::geodesic_flow(x, flip ? -t : t); };
  }

  Bracket distance(const Point& x, const Point& y) const { return origami::distance_bracket(x, y); }

  /// Only for x0 with lower-triangular marking (its vertical foliation is the
  /// canonical one), f a canonical vertical multiple, and x on the ray.
  Bracket ray_excess(const Point& x0, const Foliation& f, const Point& x, double t) const {
    if (f.axis() != origami::Axis::Vertical || !canonical_multiple(f)) {
      throw InvalidInput("origami rays are available toward the canonical vertical foliation only");
    }
    if (x0.deform().b != 0.0) throw InvalidInput("ray base point must have a lower-triangular marking");
    const Mat2<double> m = x.deform() * x0.deform().inverse();
    const double tol = 1e-12 * (1.0 + std::abs(m.a) + std::abs(m.d));
    if (std::abs(m.b) > tol || std::abs(m.c) > tol || !(m.a > 0.0) || std::abs(m.a * m.d - 1.0) > tol) {
      throw InvalidInput("origami distances to the ray are available for points on the ray only");
    }
    const Bracket d = origami::distance_bracket(x, origami::geodesic_flow(x0, t));
    return Bracket(d.lo() - t, d.hi() - t);
  }

 private:
  origami::Origami surface_;
};

static_assert(DistanceBackend<OrigamiBackend>);

}  // namespace horoteich::horolab
