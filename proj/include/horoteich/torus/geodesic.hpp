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

#include "horoteich/kernel.hpp"
#include "horoteich/torus/curve.hpp"

namespace horoteich::torus {

/// The curve c' with Ext_{m tau}(c) = Ext_tau(c') for integer unimodular m
/// of determinant 1: c' = (p d + q b, p c + q a).
inline TorusCurve pull_back(const TorusCurve& c, const IntMat2& m) {
  return TorusCurve::along(c.p() * m.d + c.q() * m.b, c.p() * m.c + c.q() * m.a);
}

/// Coordinates w = gamma_f^{-1} tau in which Ext(f) = 1 / Im w.
inline UpperHalfPoint to_chart(const TorusCurve& f, const UpperHalfPoint& tau) {
  return mobius_apply(cusp_chart(f).inverse(), tau);
}
inline UpperHalfPoint from_chart(const TorusCurve& f, const UpperHalfPoint& w) {
  return mobius_apply(cusp_chart(f), w);
}

/// Point of the horosphere {Ext(f) = level} at horocycle parameter x: the
/// chart image of x + i / level. The parameter is the horocycle-flow time.
inline UpperHalfPoint horocycle_point(const TorusCurve& f, double level, double x) {
  if (!(level > 0.0)) throw InvalidInput("horosphere level must be positive");
  return from_chart(f, UpperHalfPoint(x, 1.0 / level));
}

/// Horocycle-flow parameter of tau about f (real part in f's chart).
inline double horocycle_parameter(const TorusCurve& f, const UpperHalfPoint& tau) {
  return to_chart(f, tau).x();
}

/// Unit-speed Teichmuller geodesic determined by two distinct curves.
/// Parametrized so that Ext(f) = i e^{-2t} and Ext(g) = i e^{2t}.
class TorusGeodesic {
 public:
  TorusGeodesic(const TorusCurve& f, const TorusCurve& g) : f_(f), g_(g) {
    if (f == g) throw InvalidInput("geodesic needs transverse curves (f = g given)");
    chart_ = cusp_chart(f);
    const TorusCurve gc = pull_back(g, chart_);
    // In the chart f = (1,0) and g = gc, so i(f, g) = |q(gc)|.
    i_ = gc.q() < 0 ? -gc.q() : gc.q();
    u_ = make_rational(-gc.p(), gc.q());
  }

  const TorusCurve& f() const { return f_; }
  const TorusCurve& g() const { return g_; }
  Cusp endpoint_a() const { return cusp_of(f_); }
  Cusp endpoint_b() const { return cusp_of(g_); }
  std::int64_t i() const { return i_; }
  /// Real part of the geodesic (a vertical line) in f's chart.
  const Rational& chart_real() const { return u_; }

  UpperHalfPoint at(double t) const {
    return mobius_apply(chart_, UpperHalfPoint(to_double(u_), std::exp(2.0 * t) / static_cast<double>(i_)));
  }

  /// Geodesic time of the nearest-point projection of tau.
  double time_of(const UpperHalfPoint& tau) const {
    const UpperHalfPoint w = mobius_apply(chart_.inverse(), tau);
    const double dx = w.x() - to_double(u_);
    const double r = std::sqrt(dx * dx + w.y() * w.y());
    return 0.5 * std::log(r * static_cast<double>(i_));
  }

 private:
  TorusCurve f_;
  TorusCurve g_;
  IntMat2 chart_;
  std::int64_t i_ = 1;
  Rational u_;
};

inline TorusGeodesic geodesic_between(const TorusCurve& f, const TorusCurve& g) { return TorusGeodesic(f, g); }

/// Unit-speed geodesic ray from x0 along which Ext(f) decays like e^{-2t}.
class TorusRay {
 public:
  TorusRay(const UpperHalfPoint& x0, const TorusCurve& f) : x0_(x0), f_(f), chart_(cusp_chart(f)) {
    const UpperHalfPoint w = mobius_apply(chart_.inverse(), x0);
    u0_ = w.x();
    y0_ = w.y();
  }

  const UpperHalfPoint& base() const { return x0_; }
  const TorusCurve& curve() const { return f_; }
  double chart_x() const { return u0_; }
  double chart_y() const { return y0_; }

  UpperHalfPoint at(double t) const { return mobius_apply(chart_, chart_at(t)); }
  /// G(t) in f's chart, where it is the vertical ray u0 + i y0 e^{2t}.
  UpperHalfPoint chart_at(double t) const { return UpperHalfPoint(u0_, y0_ * std::exp(2.0 * t)); }
  UpperHalfPoint to_chart(const UpperHalfPoint& x) const { return mobius_apply(chart_.inverse(), x); }

  /// d(x, G(t)) - t, written without cancellation so that it stays accurate
  /// when e^{2t} overflows.
  double renormalized_distance(const UpperHalfPoint& x, double t) const {
    const UpperHalfPoint w = to_chart(x);
    const double dx = w.x() - u0_;
    const double b = w.y();
    const double log_y = std::log(y0_) + 2.0 * t;
    const double s2 = dx * dx + b * b;
    const double r = std::exp(std::log(s2) - 2.0 * log_y);
    const double inv_a = std::exp(std::log(2.0 * b) - log_y) / (1.0 + r);
    const double root = std::sqrt(std::max(0.0, 1.0 - inv_a * inv_a));
    return 0.5 * (std::log(y0_) - std::log(b) + std::log1p(r) + std::log1p(root) - std::log(2.0));
  }

 private:
  UpperHalfPoint x0_;
  TorusCurve f_;
  IntMat2 chart_;
  double u0_ = 0.0;
  double y0_ = 1.0;
};

}  // namespace horoteich::torus
