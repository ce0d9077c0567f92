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
#include <utility>
#include <vector>

#include "horoteich/kernel.hpp"
#include "horoteich/torus/curve.hpp"
#include "horoteich/torus/geodesic.hpp"
#include "horoteich/torus/kerckhoff.hpp"

namespace horoteich::torus {

/// Busemann function of the ray from x0 toward f: 1/2 log(Ext_x(f) / Ext_x0(f)).
inline double busemann(const UpperHalfPoint& x0, const WeightedTorusFoliation& f, const UpperHalfPoint& x) {
  return 0.5 * (std::log(extremal_length(x, f.curve)) - std::log(extremal_length(x0, f.curve)));
}

struct BusemannLimitResult {
  double value = 0.0;
  std::vector<std::pair<double, double>> sequence;  // (t_k, D(t_k))
  bool monotone = true;
};

/// lim D(t) with D(t) = d(x, G(t)) - t, d from the Kerckhoff enumeration,
/// at t = 2^k for k = 0, 1, ... until successive values differ by < tol.
/// Distances are evaluated in f's cusp chart (an integral change of marking,
/// which permutes curves and so preserves Kerckhoff's supremum); there G(t)
/// stays representable instead of collapsing onto a rational cusp.
inline BusemannLimitResult busemann_limit(const UpperHalfPoint& x0, const WeightedTorusFoliation& f,
                                          const UpperHalfPoint& x, double tol, int max_doublings = 6) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  const TorusRay ray(x0, f.curve);
  const double dtol = tol / 8.0;
  const UpperHalfPoint xc = ray.to_chart(x);
  BusemannLimitResult out;
  for (int k = 0; k <= max_doublings; ++k) {
    const double t = std::ldexp(1.0, k);
    const double d = kerckhoff_distance(xc, ray.chart_at(t), dtol).value - t;
    if (!out.sequence.empty()) {
      const double prev = out.sequence.back().second;
      // Each distance is within dtol of the truth; allow that plus rounding.
      if (d > prev + 2.0 * dtol + 1e-12 * t) {
        out.monotone = false;
        out.sequence.emplace_back(t, d);
        throw ConsistencyFailure("Busemann sequence D(t) increased between t = " + std::to_string(t / 2) +
                                 " and t = " + std::to_string(t));
      }
      if (std::abs(d - prev) < tol) {
        out.sequence.emplace_back(t, d);
        out.value = d;
        return out;
      }
    }
    out.sequence.emplace_back(t, d);
  }
  throw BudgetExhausted("Busemann limit did not settle within the doubling budget", out.sequence.back().second);
}

enum class BallMembership { Inside, Outside, Inconclusive };

struct BallLimitSample {
  UpperHalfPoint x{0.0, 1.0};
  double busemann = 0.0;
  std::vector<BallMembership> membership;  // at t = 2^k, k = 0..K
  BallMembership limit = BallMembership::Inconclusive;
  bool nested = true;      // never leaves the ball once inside
  bool stabilized = true;  // final membership matches the limit class
};

struct BallLimitReport {
  std::vector<BallLimitSample> samples;
  std::vector<std::size_t> inconclusive;  // indices with |B| within margin
  bool all_ok = true;
};

/// Membership of each sample in the open ball B(G(t), t) for t = 2^k up to
/// t_max, compared with the sub-level set {B < 0}. Points with |D| within
/// margin are inconclusive at that time.
inline BallLimitReport metric_ball_limit_check(const UpperHalfPoint& x0, const WeightedTorusFoliation& f,
                                               const std::vector<UpperHalfPoint>& sample, double t_max,
                                               double margin = 1e-9) {
  if (sample.empty()) throw InvalidInput("metric-ball check needs a nonempty sample");
  if (!(t_max >= 1.0)) throw InvalidInput("t_max must be at least 1");
  const TorusRay ray(x0, f.curve);
  BallLimitReport rep;
  auto classify = [&](double v) {
    if (v < -margin) return BallMembership::Inside;
    if (v > margin) return BallMembership::Outside;
    return BallMembership::Inconclusive;
  };
  for (std::size_t j = 0; j < sample.size(); ++j) {
    BallLimitSample s;
    s.x = sample[j];
    s.busemann = busemann(x0, f, s.x);
    s.limit = classify(s.busemann);
    bool entered = false;
    for (int k = 0; std::ldexp(1.0, k) <= t_max; ++k) {
      const BallMembership m = classify(ray.renormalized_distance(s.x, std::ldexp(1.0, k)));
      if (entered && m != BallMembership::Inside) s.nested = false;
      if (m == BallMembership::Inside) entered = true;
      s.membership.push_back(m);
    }
    s.stabilized = s.membership.back() == s.limit;
    if (s.limit == BallMembership::Inconclusive) rep.inconclusive.push_back(j);
    rep.all_ok = rep.all_ok && s.nested && s.stabilized;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace horoteich::torus
