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
#include <cstdint>
#include <type_traits>
#include <utility>

#include "horoteich/kernel.hpp"
#include "horoteich/origami/origami.hpp"

namespace horoteich::origami {

/// Point A . O of the SL(2,R)-orbit of an origami: the flat structure whose
/// developing map is A applied to unit-square coordinates. T is double or
/// Rational.
template <class T>
class MarkedFlatSurface {
 public:
  explicit MarkedFlatSurface(Origami base, Mat2<T> deform = Mat2<T>::identity())
      : base_(std::move(base)), deform_(std::move(deform)) {
    if (!(deform_.det() > T(0))) throw InvalidInput("marking matrix must have positive determinant");
  }

  const Origami& base() const { return base_; }
  const Mat2<T>& deform() const { return deform_; }
  T area() const { return deform_.det() * T(base_.n()); }

  /// Holonomy of a base-coordinate vector on this surface.
  template <class I>
  Vec2<T> develop(const Vec2<I>& hol) const {
    return deform_ * Vec2<T>{T(hol.x), T(hol.y)};
  }

  /// m . x, composing on the left.
  MarkedFlatSurface acted(const Mat2<T>& m) const { return MarkedFlatSurface(base_, m * deform_); }

 private:
  Origami base_;
  Mat2<T> deform_;
};

/// g_t = diag(e^t, e^-t).
inline MarkedFlatSurface<double> geodesic_flow(const MarkedFlatSurface<double>& x, double t) {
  if (!std::isfinite(t)) throw InvalidInput("flow parameter must be finite");
  return x.acted(geodesic_matrix(t));
}

/// diag(k, 1/k), the geodesic flow at time log k; exact for Rational k.
template <class T>
MarkedFlatSurface<T> stretch_flow(const MarkedFlatSurface<T>& x, const T& k) {
  if (!(k > T(0))) throw InvalidInput("stretch factor must be positive");
  return x.acted(Mat2<T>{k, T(0), T(0), T(1) / k});
}

/// h^s: (x, y) -> (x, y + s x); fixes the vertical measure |dx|.
template <class T>
MarkedFlatSurface<T> horocycle_flow(const MarkedFlatSurface<T>& x, const T& s) {
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(s)) throw InvalidInput("flow parameter must be finite");
  }
  return x.acted(horocycle_matrix(s));
}

/// Extremal length of the base vertical foliation |dx| (cylinder widths as
/// weights). Its leaves run along A e2 with transverse measure
/// |A e2| / det A times Euclidean distance, so Ext = area (|A e2| / det A)^2.
template <class T>
T ext_vertical(const MarkedFlatSurface<T>& x) {
  const Vec2<T> e = x.deform().column(1);
  return T(x.base().n()) * dot(e, e) / x.deform().det();
}

/// Extremal length of the base horizontal foliation |dy|.
template <class T>
T ext_horizontal(const MarkedFlatSurface<T>& x) {
  const Vec2<T> e = x.deform().column(0);
  return T(x.base().n()) * dot(e, e) / x.deform().det();
}

}  // namespace horoteich::origami
