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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "horoteich/horolab/triple.hpp"
#include "horoteich/kernel.hpp"
#include "horoteich/torus/curve.hpp"
#include "horoteich/torus/geodesic.hpp"
#include "horoteich/torus/kerckhoff.hpp"

namespace horoteich::torus {

/// Horosphere {Ext(F) = level}, stored for the unit-weight curve with level
/// divided by weight^2, so HS(k F, k^2 s) and HS(F, s) compare equal.
class HoroSpec {
 public:
  HoroSpec(const WeightedTorusFoliation& f, const Rational& level) : curve_(f.curve) {
    if (!(level > 0)) throw InvalidInput("horosphere level must be positive");
    level_ = level / (f.weight * f.weight);
  }
  HoroSpec(const TorusCurve& c, const Rational& level) : HoroSpec(WeightedTorusFoliation(c), level) {}

  const TorusCurve& curve() const { return curve_; }
  const Rational& level() const { return level_; }
  double level_d() const { return to_double(level_); }

  /// Ext(curve) - level at tau; negative inside the open horoball.
  double excess(const UpperHalfPoint& tau) const { return extremal_length(tau, curve_) - level_d(); }
  bool in_open_ball(const UpperHalfPoint& tau) const { return excess(tau) < 0.0; }

  UpperHalfPoint point(double horocycle_param) const { return horocycle_point(curve_, level_d(), horocycle_param); }

  friend bool operator==(const HoroSpec&, const HoroSpec&) = default;

 private:
  TorusCurve curve_;
  Rational level_;
};

/// Point of geodesic_between(f, g) with Ext(f) = s, by bisection on the
/// geodesic time (Ext(f) is strictly decreasing in t).
inline UpperHalfPoint tangent_point(const WeightedTorusFoliation& f, double s, const WeightedTorusFoliation& g,
                                    double t_tol = 1e-12) {
  if (!(s > 0.0)) throw InvalidInput("level must be positive");
  const TorusGeodesic geo(f.curve, g.curve);
  auto ext_f = [&](double t) { return extremal_length(geo.at(t), f); };
  double lo = -1.0, hi = 1.0;
  while (ext_f(lo) < s) lo *= 2.0;
  while (ext_f(hi) > s) hi *= 2.0;
  while (hi - lo > t_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (ext_f(mid) > s ? lo : hi) = mid;
  }
  return geo.at(0.5 * (lo + hi));
}

struct TangencyReport {
  bool tangent = false;
  Rational product;     // level1 * level2 (unit-weight normalization)
  Rational i_squared;   // i(f1, f2)^2
  std::optional<UpperHalfPoint> point;
};

/// Exact test of level1 * level2 = i(f1, f2)^2.
inline TangencyReport tangency_check(const HoroSpec& h1, const HoroSpec& h2) {
  const std::int64_t i = intersection(h1.curve(), h2.curve());
  if (i == 0) throw InvalidInput("tangency needs transverse foliations (parallel curves given)");
  TangencyReport out;
  out.product = h1.level() * h2.level();
  out.i_squared = Rational(i) * Rational(i);
  out.tangent = out.product == out.i_squared;
  if (out.tangent) {
    out.point = tangent_point(WeightedTorusFoliation(h1.curve()), h1.level_d(), WeightedTorusFoliation(h2.curve()));
  }
  return out;
}

inline horolab::TripleLevels<Rational> triple_tangency_levels(const Rational& i_ab, const Rational& i_ag,
                                                              const Rational& i_bg) {
  return horolab::triple_solve(i_ab, i_ag, i_bg);
}

struct TripleRealization {
  horolab::TripleLevels<Rational> levels;
  std::array<HoroSpec, 3> horospheres;
  std::array<UpperHalfPoint, 3> tangent_points;  // (alpha,beta), (alpha,gamma), (beta,gamma)
};

/// Three pairwise tangent horospheres about pairwise distinct curves.
inline TripleRealization triple_tangency(const TorusCurve& a, const TorusCurve& b, const TorusCurve& g) {
  const auto lv = triple_tangency_levels(Rational(intersection(a, b)), Rational(intersection(a, g)),
                                         Rational(intersection(b, g)));
  const HoroSpec ha(a, lv.r), hb(b, lv.s), hg(g, lv.t);
  auto point = [](const HoroSpec& x, const HoroSpec& y) {
    const TangencyReport rep = tangency_check(x, y);
    if (!rep.tangent) throw ConsistencyFailure("triple solution is not pairwise tangent");
    return *rep.point;
  };
  return {lv, {ha, hb, hg}, {point(ha, hb), point(ha, hg), point(hb, hg)}};
}

struct EquidistanceSample {
  UpperHalfPoint x{0.0, 1.0};
  UpperHalfPoint foot{0.0, 1.0};
  double distance = 0.0;
  bool foot_unique = false;
  bool ok = false;
};

struct EquidistanceReport {
  double expected = 0.0;
  std::vector<EquidistanceSample> samples;
  bool all_ok = true;
};

/// For sampled X on HS(f, s), minimizes the Kerckhoff distance over the
/// horocycle HS(f, t) (golden section on the horocycle parameter), checks it
/// against 1/2 log(t/s) and checks on a grid that the minimum is isolated.
inline EquidistanceReport equidistance_check(const WeightedTorusFoliation& f, const Rational& s, const Rational& t,
                                             std::size_t samples, std::uint64_t seed = 0, double tol = 1e-6) {
  if (!(s > 0) || !(t > 0)) throw InvalidInput("levels must be positive");
  if (s > t) throw InvalidInput("equidistance needs s <= t");
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  const HoroSpec hs(f, s), ht(f, t);
  EquidistanceReport rep;
  rep.expected = 0.5 * std::log(to_double(t / s));
  const double ktol = std::min(tol * 1e-2, 1e-9);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> param(-2.0, 2.0);
  const double radius = 2.0 * (1.0 / hs.level_d() + 1.0 / ht.level_d());

  for (std::size_t k = 0; k < samples; ++k) {
    EquidistanceSample smp;
    const double a = param(rng);
    smp.x = hs.point(a);
    auto dist = [&](double b) { return kerckhoff_distance(smp.x, ht.point(b), ktol).value; };

    constexpr double kInvPhi = 0.6180339887498949;
    double lo = a - radius, hi = a + radius;
    double c = hi - kInvPhi * (hi - lo), d = lo + kInvPhi * (hi - lo);
    double fc = dist(c), fd = dist(d);
    while (hi - lo > 1e-7 * radius) {
      if (fc < fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - kInvPhi * (hi - lo);
        fc = dist(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + kInvPhi * (hi - lo);
        fd = dist(d);
      }
    }
    const double b_star = 0.5 * (lo + hi);
    smp.foot = ht.point(b_star);
    smp.distance = dist(b_star);

    // Isolation: values on a grid decrease towards the foot and increase
    // after it; only grid points adjacent to the foot may be near-minimal.
    constexpr int kGrid = 40;
    const double h = 2.0 * radius / kGrid;
    const double slack = 4.0 * ktol;
    bool unique = true;
    for (int j = 0; j < kGrid; ++j) {
      const double b0 = a - radius + j * h, b1 = b0 + h;
      const double v0 = dist(b0), v1 = dist(b1);
      if (b1 <= b_star && v1 > v0 + slack) unique = false;
      if (b0 >= b_star && v0 > v1 + slack) unique = false;
      if (std::abs(b0 - b_star) > 1.5 * h && v0 <= smp.distance + slack) unique = false;
    }
    smp.foot_unique = unique;
    smp.ok = unique && std::abs(smp.distance - rep.expected) <= tol;
    rep.all_ok = rep.all_ok && smp.ok;
    rep.samples.push_back(smp);
  }
  return rep;
}

struct RatioCurveResult {
  TorusCurve curve{1, 1};
  Rational ratio;  // i(alpha, curve) / i(beta, curve), exact
  std::size_t depth = 0;
};

/// Curve gamma with |i(alpha, gamma) / i(beta, gamma) - target| < eps.
/// gamma = a alpha + b beta has ratio exactly b / a; b / a descends the
/// Stern-Brocot tree toward the target.
inline RatioCurveResult ratio_curve_search(const TorusCurve& alpha, const TorusCurve& beta, double target, double eps,
                                           std::size_t cap = 1'000'000) {
  if (alpha == beta) throw InvalidInput("ratio search needs distinct curves");
  if (!(eps > 0.0)) throw InvalidInput("epsilon must be positive");
  if (!(target > 0.0) || !std::isfinite(target)) throw InvalidInput("target ratio must be positive");
  const Rational goal = rational_from_double(target);
  const Rational tol = rational_from_double(eps);
  // Fractions b / a; bounds 0/1 and 1/0.
  std::int64_t la = 1, lb = 0, ra = 0, rb = 1;
  Rational best_err(-1);
  for (std::size_t depth = 1; depth <= cap; ++depth) {
    const std::int64_t a = la + ra, b = lb + rb;
    const Rational ratio = make_rational(b, a);
    const Rational diff = ratio - goal;
    const Rational err = diff < 0 ? Rational(-diff) : diff;
    if (best_err < 0 || err < best_err) best_err = err;
    if (err < tol) {
      const TorusCurve gamma = TorusCurve::along(a * alpha.p() + b * beta.p(), a * alpha.q() + b * beta.q());
      const Rational check = make_rational(intersection(alpha, gamma), intersection(beta, gamma));
      if (check != ratio) throw ConsistencyFailure("ratio curve intersection numbers disagree with b/a");
      return {gamma, ratio, depth};
    }
    if (ratio < goal) {
      la = a;
      lb = b;
    } else {
      ra = a;
      rb = b;
    }
  }
  throw BudgetExhausted("ratio-curve descent budget exhausted; best error " + to_string(best_err), to_double(best_err));
}

}  // namespace horoteich::torus
