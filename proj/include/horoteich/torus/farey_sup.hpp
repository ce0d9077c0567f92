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
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "horoteich/kernel.hpp"
#include "horoteich/torus/curve.hpp"

namespace horoteich::torus {

/// Q(p, q) = a p^2 + 2 b p q + c q^2.
struct QuadraticForm {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double p, double q) const { return a * p * p + 2.0 * b * p * q + c * q * q; }
  double bilinear(double p1, double q1, double p2, double q2) const {
    return a * p1 * p2 + b * (p1 * q2 + q1 * p2) + c * q1 * q2;
  }
};

/// The form gamma -> Ext_tau(gamma) = |p + q tau|^2 / Im tau.
inline QuadraticForm ext_form(const UpperHalfPoint& tau) {
  const double y = tau.y();
  return {1.0 / y, tau.x() / y, (tau.x() * tau.x() + y * y) / y};
}

/// The rank-one form gamma -> i(f, gamma)^2 = (p_f q - q_f p)^2.
inline QuadraticForm intersection_square_form(const TorusCurve& f) {
  const double pf = static_cast<double>(f.p());
  const double qf = static_cast<double>(f.q());
  return {qf * qf, -pf * qf, pf * pf};
}

struct FareySupResult {
  double best = 0.0;       // max of num/den over enumerated curves (lower bound)
  double upper = 0.0;      // certified upper bound on the supremum
  TorusCurve witness{1, 0};
  std::size_t nodes = 0;   // cones expanded
};

namespace detail {

struct FareyCone {
  std::int64_t ap, aq, bp, bq;  // spanning primitive vectors, cross(a, b) > 0
  double bound;
  bool operator<(const FareyCone& o) const { return bound < o.bound; }
};

/// Top of the pencil (num, den): the largest value lambda of num/den and a
/// direction attaining it. On the projective line num/den has exactly one
/// local maximum, so over any cone it peaks either at that direction (if the
/// cone contains it) or at an endpoint.
struct PencilTop {
  double lambda;
  double ex, ey;
};

inline PencilTop pencil_top(const QuadraticForm& num, const QuadraticForm& den) {
  // Reduce to a symmetric eigenproblem through the Cholesky factor
  // den = L L^T; the closed-form 2x2 symmetric eigenvalue has no
  // cancellation even when the pencil is nearly scalar.
  const double l11 = std::sqrt(den.a);
  const double l21 = den.b / l11;
  const double l22 = std::sqrt(std::max(den.c - l21 * l21, std::numeric_limits<double>::min()));
  // Li = L^{-1} = [[i11, 0], [i21, i22]].
  const double i11 = 1.0 / l11, i21 = -l21 / (l11 * l22), i22 = 1.0 / l22;
  // M = Li num Li^T.
  const double m11 = i11 * i11 * num.a;
  const double m12 = i11 * (i21 * num.a + i22 * num.b);
  const double m22 = i21 * i21 * num.a + 2.0 * i21 * i22 * num.b + i22 * i22 * num.c;
  const double h = 0.5 * (m11 - m22);
  const double r = std::hypot(h, m12);
  const double lambda = 0.5 * (m11 + m22) + r;
  double v1 = 1.0, v2 = 0.0;
  if (r > 0.0) {
    if (h >= 0.0) {
      v1 = h + r;
      v2 = m12;
    } else {
      v1 = m12;
      v2 = r - h;
    }
  }
  // e = Li^T v.
  const double ex = i11 * v1 + i21 * v2, ey = i22 * v2;
  const double n = std::hypot(ex, ey);
  return {lambda, ex / n, ey / n};
}

inline double form_ratio(const QuadraticForm& num, const QuadraticForm& den, double p, double q) {
  return num(p, q) / den(p, q);
}

/// Coordinates (s, t) of the top direction in the basis (a, b), with the
/// sign of the direction chosen so that s + t >= 0.
inline std::pair<double, double> cone_coords(const PencilTop& top, double ap, double aq, double bp, double bq) {
  const double det = ap * bq - aq * bp;
  double s = (top.ex * bq - top.ey * bp) / det;
  double t = (ap * top.ey - aq * top.ex) / det;
  if (s + t < 0.0) {
    s = -s;
    t = -t;
  }
  return {s, t};
}

inline bool cone_contains_top(const PencilTop& top, std::int64_t ap, std::int64_t aq, std::int64_t bp,
                              std::int64_t bq) {
  const double na = std::hypot(double(ap), double(aq)), nb = std::hypot(double(bp), double(bq));
  const auto [s, t] = cone_coords(top, ap / na, aq / na, bp / nb, bq / nb);
  // Slack keeps a direction on or numerically next to the boundary inside.
  constexpr double kSlack = 1e-12;
  return s >= -kSlack && t >= -kSlack;
}

inline double outward(double v) {
  return v * (1.0 + 64.0 * std::numeric_limits<double>::epsilon());
}

}  // namespace detail

/// Supremum of num(gamma)/den(gamma) over primitive integer vectors, by
/// best-first refinement of Farey cones of the projective line. den must be
/// positive definite, num positive semidefinite. Each cone carries the exact
/// maximum of the ratio over its real directions; cones that cannot beat the
/// current best by more than a factor exp(log_gap) are dropped. A cone is
/// split along the continued-fraction run toward its peak direction, so long
/// Stern-Brocot runs cost one expansion. Throws BudgetExhausted (carrying the
/// best lower bound) after `cap` expansions or when the cone vectors outgrow
/// exact double arithmetic.
inline FareySupResult farey_ratio_sup(const QuadraticForm& num, const QuadraticForm& den, double log_gap,
                                      std::size_t cap = 1'000'000) {
  if (!(log_gap > 0.0)) throw InvalidInput("Farey enumeration tolerance must be positive");
  if (!(den.a > 0.0) || !(den.a * den.c - den.b * den.b > 0.0)) {
    throw InvalidInput("denominator form must be positive definite");
  }
  FareySupResult out;
  auto offer = [&](std::int64_t p, std::int64_t q) {
    const double r = detail::form_ratio(num, den, static_cast<double>(p), static_cast<double>(q));
    if (r > out.best) {
      out.best = r;
      out.witness = TorusCurve::along(p, q);
    }
  };
  offer(1, 0);
  offer(0, 1);
  const double factor = std::exp(log_gap);
  const detail::PencilTop top = detail::pencil_top(num, den);
  double dropped = 0.0;  // largest bound among discarded cones

  std::priority_queue<detail::FareyCone> open;
  auto consider = [&](std::int64_t ap, std::int64_t aq, std::int64_t bp, std::int64_t bq) {
    double bound = std::max(detail::form_ratio(num, den, double(ap), double(aq)),
                            detail::form_ratio(num, den, double(bp), double(bq)));
    if (detail::cone_contains_top(top, ap, aq, bp, bq)) bound = std::max(bound, top.lambda);
    bound = detail::outward(bound);
    if (bound > out.best * factor) {
      open.push({ap, aq, bp, bq, bound});
    } else {
      dropped = std::max(dropped, bound);
    }
  };
  // [(1,0),(0,1)] and [(0,1),(-1,0)] cover every direction.
  consider(1, 0, 0, 1);
  consider(0, 1, -1, 0);

  constexpr double kMaxEntry = 4503599627370496.0;  // 2^52
  constexpr double kInf = std::numeric_limits<double>::infinity();
  while (!open.empty()) {
    const detail::FareyCone cone = open.top();
    if (cone.bound <= out.best * factor) break;
    open.pop();
    if (out.nodes >= cap) {
      throw BudgetExhausted("Farey enumeration budget exhausted before the tolerance was certified", out.best);
    }
    ++out.nodes;
    const auto [s, t] = detail::cone_coords(top, double(cone.ap), double(cone.aq), double(cone.bp), double(cone.bq));
    // Split at a vector k a + b (peak near a) or a + k b (peak near b).
    const bool near_a = s >= t;
    const double ratio = near_a ? (t > 0.0 ? s / t : kInf) : (s > 0.0 ? t / s : kInf);
    const double big = near_a ? std::max(std::abs(double(cone.ap)), std::abs(double(cone.aq)))
                              : std::max(std::abs(double(cone.bp)), std::abs(double(cone.bq)));
    const double room = std::floor(kMaxEntry / (2.0 * big));
    if (room < 1.0) {
      throw BudgetExhausted("Farey enumeration reached the limit of exact double arithmetic", out.best);
    }
    const std::int64_t k = static_cast<std::int64_t>(std::max(1.0, std::min(std::floor(ratio), room)));
    std::int64_t mp, mq;
    if (near_a) {
      mp = k * cone.ap + cone.bp;
      mq = k * cone.aq + cone.bq;
    } else {
      mp = cone.ap + k * cone.bp;
      mq = cone.aq + k * cone.bq;
    }
    const std::int64_t g = gcd64(mp, mq);
    mp /= g;
    mq /= g;
    offer(mp, mq);
    consider(cone.ap, cone.aq, mp, mq);
    consider(mp, mq, cone.bp, cone.bq);
  }
  out.upper = std::max({out.best, dropped, open.empty() ? 0.0 : open.top().bound});
  return out;
}

}  // namespace horoteich::torus
