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

#include <cstdint>
#include <ostream>
#include <string>

#include "horoteich/kernel.hpp"

namespace horoteich::torus {

/// Primitive homology class p*[1] + q*[tau] of the flat torus C / <1, tau>.
/// Canonical sign: p > 0, or (p, q) = (0, 1).
class TorusCurve {
 public:
  TorusCurve(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw InvalidInput("(0,0) is not a curve");
    if (gcd64(p, q) != 1) {
      throw InvalidInput("curve (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive (gcd != 1)");
    }
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
    p_ = p;
    q_ = q;
  }

  /// Primitive curve along the integer vector (p, q) scaled to gcd 1.
  static TorusCurve along(std::int64_t p, std::int64_t q) {
    const std::int64_t g = gcd64(p, q);
    if (g == 0) throw InvalidInput("(0,0) is not a curve");
    return TorusCurve(p / g, q / g);
  }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const TorusCurve&, const TorusCurve&) = default;
  friend auto operator<=>(const TorusCurve&, const TorusCurve&) = default;
  friend std::ostream& operator<<(std::ostream& os, const TorusCurve& c) {
    return os << "(" << c.p_ << "," << c.q_ << ")";
  }
  std::string str() const { return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

 private:
  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

/// weight * curve, a measured foliation with closed leaves.
struct WeightedTorusFoliation {
  Rational weight;
  TorusCurve curve;

  WeightedTorusFoliation(Rational w, TorusCurve c) : weight(std::move(w)), curve(c) {
    if (!(weight > 0)) throw InvalidInput("foliation weight must be positive");
  }
  explicit WeightedTorusFoliation(TorusCurve c) : weight(1), curve(c) {}
};

/// |p1 q2 - q1 p2|.
inline std::int64_t intersection(const TorusCurve& c1, const TorusCurve& c2) {
  const std::int64_t v = c1.p() * c2.q() - c1.q() * c2.p();
  return v < 0 ? -v : v;
}

inline Rational intersection(const WeightedTorusFoliation& f, const WeightedTorusFoliation& g) {
  return f.weight * g.weight * Rational(intersection(f.curve, g.curve));
}

/// |p + q tau|^2 / Im tau.
inline double extremal_length(const UpperHalfPoint& tau, const TorusCurve& c) {
  const double re = static_cast<double>(c.p()) + static_cast<double>(c.q()) * tau.x();
  const double im = static_cast<double>(c.q()) * tau.y();
  return (re * re + im * im) / tau.y();
}

/// weight^2 |p + q tau|^2 / Im tau.
inline double extremal_length(const UpperHalfPoint& tau, const WeightedTorusFoliation& f) {
  const double w = to_double(f.weight);
  return w * w * extremal_length(tau, f.curve);
}

/// Exact weight^2 |p + q tau|^2 / Im tau for tau = x + i y with rational parts.
inline Rational extremal_length_exact(const Rational& x, const Rational& y, const WeightedTorusFoliation& f) {
  if (!(y > 0)) throw InvalidInput("upper half-plane point needs y > 0");
  const Rational re = Rational(f.curve.p()) + Rational(f.curve.q()) * x, im = Rational(f.curve.q()) * y;
  return f.weight * f.weight * (re * re + im * im) / y;
}

/// Boundary point of H^2 where Ext(curve) -> 0: -p/q, or infinity when q = 0.
struct Cusp {
  bool at_infinity = false;
  Rational value;

  friend bool operator==(const Cusp&, const Cusp&) = default;
  std::string str() const { return at_infinity ? std::string("inf") : to_string(value); }
};

inline Cusp cusp_of(const TorusCurve& c) {
  if (c.q() == 0) return {true, Rational(0)};
  return {false, make_rational(-c.p(), c.q())};
}

/// Integer unimodular gamma with gamma(inf) = cusp_of(c) and
/// Ext_{gamma tau}(c) = 1 / Im tau. Columns: gamma = [[p, b], [-q, d]] with
/// p d + q b = 1.
inline IntMat2 cusp_chart(const TorusCurve& c) {
  const Bezout bz = bezout(c.p(), c.q());
  // bz: p x + q y = 1.
  return {c.p(), bz.y, -c.q(), bz.x};
}

}  // namespace horoteich::torus
