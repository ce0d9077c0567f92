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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "horoteich/kernel.hpp"
#include "horoteich/origami/cylinders.hpp"
#include "horoteich/origami/origami.hpp"

namespace horoteich::origami {

using IntVec = Vec2<std::int64_t>;
using RatVec = Vec2<Rational>;

/// Primitive representative of a line direction: dx > 0, or (0, 1).
inline IntVec normalize_direction(std::int64_t dx, std::int64_t dy) {
  const std::int64_t g = gcd64(dx, dy);
  if (g == 0) throw InvalidInput("direction (0,0) is degenerate");
  dx /= g;
  dy /= g;
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return {dx, dy};
}

/// Direction of the line of slope dy/dx.
inline IntVec slope_direction(const Rational& slope) {
  return normalize_direction(static_cast<std::int64_t>(denominator_of(slope)),
                             static_cast<std::int64_t>(numerator_of(slope)));
}
inline IntVec vertical_direction() { return {0, 1}; }

enum class Edge { Left, Bottom };

/// Starting point (0, offset) or (offset, 0) on an edge of a square.
struct TraceStart {
  int square = 0;
  Edge edge = Edge::Left;
  Rational offset = make_rational(1, 2);
};

/// Straight chord of a closed geodesic inside one unit square, in local
/// coordinates [0, 1]^2.
struct Segment {
  int square = 0;
  RatVec from;
  RatVec to;
  Vec2<double> from_d;
  Vec2<double> to_d;
};

/// A singular vertex lies on the requested line.
class SingularityHit : public Error {
 public:
  SingularityHit(const std::string& what, Rational suggestion) : Error(what), suggestion_(std::move(suggestion)) {}
  /// Offset to retry with (the current offset divided by 3).
  const Rational& suggested_offset() const noexcept { return suggestion_; }

 private:
  Rational suggestion_;
};

/// Closed straight flat geodesic on an origami, as exact chords.
class CurveTrace {
 public:
  const Origami& surface() const { return *surface_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const IntVec& direction() const { return direction_; }
  /// Total displacement, a positive multiple of direction().
  const IntVec& holonomy() const { return holonomy_; }
  const TraceStart& start() const { return start_; }
  /// Regular vertices the trace passes through.
  const std::vector<int>& vertices() const { return vertices_; }
  /// Rational slope, or nullopt for vertical traces.
  std::optional<Rational> slope() const {
    if (direction_.x == 0) return std::nullopt;
    return make_rational(direction_.y, direction_.x);
  }

 private:
  friend CurveTrace trace_curve(const Origami&, const TraceStart&, IntVec, std::size_t);
  std::shared_ptr<const Origami> surface_;
  std::vector<Segment> segments_;
  IntVec direction_{1, 0};
  IntVec holonomy_{0, 0};
  TraceStart start_;
  std::vector<int> vertices_;
};

/// Follows the line from `start` in `direction` through the gluings until it
/// returns to the starting point. A line through a regular vertex passes to
/// the diagonal square; a singular vertex raises SingularityHit.
inline CurveTrace trace_curve(const Origami& o, const TraceStart& start, IntVec direction, std::size_t budget = 0) {
  direction = normalize_direction(direction.x, direction.y);
  const std::int64_t a = direction.x, b = direction.y;
  if (start.square < 0 || start.square >= o.n()) throw InvalidInput("start square out of range");
  if (!(start.offset > 0) || !(start.offset < 1)) throw InvalidInput("start offset must lie strictly inside the edge");
  if (start.edge == Edge::Left && a == 0) throw InvalidInput("a vertical line cannot start on a left edge");
  if (start.edge == Edge::Bottom && b <= 0) throw InvalidInput("a line starting on a bottom edge must point upward");
  if (budget == 0) budget = 4 * static_cast<std::size_t>(o.n()) * static_cast<std::size_t>(a + (b < 0 ? -b : b) + 1);

  CurveTrace out;
  out.surface_ = std::make_shared<const Origami>(o);
  out.direction_ = direction;
  out.start_ = start;
  const RatVec p0 = start.edge == Edge::Left ? RatVec{Rational(0), start.offset} : RatVec{start.offset, Rational(0)};
  const Rational ra(a), rb(b);
  const Rational one(1), zero(0);
  int sq = start.square;
  RatVec p = p0;
  RatVec total{zero, zero};
  auto hit = [&](int vertex) {
    if (o.singular(vertex)) {
      throw SingularityHit("line hits a singular vertex (cone angle " + std::to_string(2 * o.cone_angle(vertex)) +
                               " pi) starting from offset " + to_string(start.offset),
                           start.offset / 3);
    }
  };
  for (std::size_t step = 0; step < budget; ++step) {
    // Exit times toward x = 1 and toward y = 1 or y = 0.
    bool has_tx = a > 0, has_ty = b != 0;
    Rational tx, ty;
    if (has_tx) tx = (one - p.x) / ra;
    if (b > 0) ty = (one - p.y) / rb;
    if (b < 0) ty = p.y / Rational(-b);
    Rational t;
    int exit_kind;  // 0: right edge, 1: top/bottom edge, 2: corner
    if (has_tx && has_ty) {
      exit_kind = tx < ty ? 0 : (ty < tx ? 1 : 2);
      t = exit_kind == 1 ? ty : tx;
    } else if (has_tx) {
      exit_kind = 0;
      t = tx;
    } else {
      exit_kind = 1;
      t = ty;
    }
    RatVec q{p.x + t * ra, p.y + t * rb};
    if (exit_kind == 0) q.x = one;
    if (exit_kind == 1) q.y = b > 0 ? one : zero;
    if (exit_kind == 2) {
      q.x = one;
      q.y = b > 0 ? one : zero;
    }
    out.segments_.push_back({sq, p, q, {to_double(p.x), to_double(p.y)}, {to_double(q.x), to_double(q.y)}});
    total = total + (q - p);
    switch (exit_kind) {
      case 0:
        sq = o.right(sq);
        p = {zero, q.y};
        break;
      case 1:
        if (b > 0) {
          sq = o.top(sq);
          p = {q.x, zero};
        } else {
          sq = o.bottom(sq);
          p = {q.x, one};
        }
        break;
      default:
        if (b > 0) {
          hit(o.upper_right(sq));
          out.vertices_.push_back(o.upper_right(sq));
          sq = o.right(o.top(sq));
          p = {zero, zero};
        } else {
          hit(o.lower_right(sq));
          out.vertices_.push_back(o.lower_right(sq));
          sq = o.bottom(o.right(sq));
          p = {zero, one};
        }
        break;
    }
    if (sq == start.square && p == p0) {
      if (denominator_of(total.x) != 1 || denominator_of(total.y) != 1) {
        throw ConsistencyFailure("closed trace has non-integral holonomy");
      }
      out.holonomy_ = {static_cast<std::int64_t>(numerator_of(total.x)),
                       static_cast<std::int64_t>(numerator_of(total.y))};
      return out;
    }
  }
  throw BudgetExhausted("trace did not close within " + std::to_string(budget) + " segments",
                        static_cast<double>(budget));
}

/// Traces from the midpoint of the natural start edge of `square` (left for
/// non-vertical lines, bottom for vertical ones), retrying with offset/3 up to
/// five times on singular vertices.
inline CurveTrace trace_from(const Origami& o, int square, IntVec direction) {
  direction = normalize_direction(direction.x, direction.y);
  TraceStart st{square, direction.x == 0 ? Edge::Bottom : Edge::Left, make_rational(1, 2)};
  for (int attempt = 0;; ++attempt) {
    try {
      return trace_curve(o, st, direction);
    } catch (const SingularityHit& e) {
      if (attempt == 5) throw;
      st.offset = e.suggested_offset();
    }
  }
}

/// Core curve of a horizontal or vertical cylinder (mid-height of its first strip).
inline CurveTrace cylinder_core(const Origami& o, const CylinderCurve& c) {
  const bool horiz = c.axis == Axis::Horizontal;
  return trace_curve(o, {c.squares.front(), horiz ? Edge::Left : Edge::Bottom, make_rational(1, 2)},
                     horiz ? IntVec{1, 0} : IntVec{0, 1});
}

namespace detail {

/// Surface point key: points on shared edges and corners get one name.
struct PointKey {
  int vertex = -1;  // >= 0 for vertices
  int square = -1;
  Rational x, y;
  friend bool operator<(const PointKey& a, const PointKey& b) {
    return std::tie(a.vertex, a.square, a.x, a.y) < std::tie(b.vertex, b.square, b.x, b.y);
  }
};

inline PointKey canonical_point(const Origami& o, int sq, Rational x, Rational y) {
  if (x == 1) {
    sq = o.right(sq);
    x = 0;
  }
  if (y == 1) {
    sq = o.top(sq);
    y = 0;
  }
  if (x == 0 && y == 0) return {o.lower_left(sq), -1, Rational(0), Rational(0)};
  return {-1, sq, std::move(x), std::move(y)};
}

inline bool maybe_crossing(const Segment& s, const Segment& t) {
  const double ux = s.to_d.x - s.from_d.x, uy = s.to_d.y - s.from_d.y;
  const double wx = t.to_d.x - t.from_d.x, wy = t.to_d.y - t.from_d.y;
  const double den = ux * wy - uy * wx;
  if (den == 0.0) return true;
  const double qx = t.from_d.x - s.from_d.x, qy = t.from_d.y - s.from_d.y;
  const double u = (qx * wy - qy * wx) / den, v = (qx * uy - qy * ux) / den;
  constexpr double kSlack = 1e-9;
  return u > -kSlack && u < 1.0 + kSlack && v > -kSlack && v < 1.0 + kSlack;
}

}  // namespace detail

/// Number of transverse crossings of two closed traces on the same origami,
/// computed exactly; 0 for parallel traces (disjoint, or the same leaf).
inline std::int64_t crossing_number(const CurveTrace& t1, const CurveTrace& t2) {
  if (!(t1.surface() == t2.surface())) throw InvalidInput("traces live on different origamis");
  const Origami& o = t1.surface();
  std::vector<std::vector<const Segment*>> by_square(o.n());
  for (const auto& s : t2.segments()) by_square[s.square].push_back(&s);
  const bool parallel = t1.direction() == t2.direction();
  std::set<detail::PointKey> points;
  bool overlap = false;
  for (const auto& s : t1.segments()) {
    const RatVec u = s.to - s.from;
    for (const Segment* tp : by_square[s.square]) {
      const Segment& t = *tp;
      if (!detail::maybe_crossing(s, t)) continue;
      const RatVec w = t.to - t.from;
      const RatVec d = t.from - s.from;
      const Rational den = cross(u, w);
      if (den == 0) {
        if (cross(d, u) == 0) {
          // Collinear chords of a square share at most their endpoints unless equal.
          const Rational uu = dot(u, u);
          const Rational a0 = dot(d, u) / uu, a1 = dot(t.to - s.from, u) / uu;
          const Rational lo = a0 < a1 ? a0 : a1, hi = a0 < a1 ? a1 : a0;
          if (lo < 1 && hi > 0) overlap = true;
        }
        continue;
      }
      const Rational sp = cross(d, w) / den, tp2 = cross(d, u) / den;
      if (sp < 0 || sp > 1 || tp2 < 0 || tp2 > 1) continue;
      points.insert(detail::canonical_point(o, s.square, s.from.x + sp * u.x, s.from.y + sp * u.y));
    }
  }
  // Traces through a common regular vertex cross there, possibly in no common square.
  for (int v1 : t1.vertices()) {
    if (std::find(t2.vertices().begin(), t2.vertices().end(), v1) != t2.vertices().end()) {
      points.insert({v1, -1, Rational(0), Rational(0)});
    }
  }
  if (parallel) {
    if (overlap && t1.segments().size() != t2.segments().size()) {
      throw InvalidInput("parallel traces share a subsegment but are not the same closed leaf");
    }
    return 0;
  }
  return static_cast<std::int64_t>(points.size());
}

}  // namespace horoteich::origami
