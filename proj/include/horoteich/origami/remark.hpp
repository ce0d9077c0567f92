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

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "horoteich/kernel.hpp"
#include "horoteich/origami/cylinders.hpp"
#include "horoteich/origami/origami.hpp"
#include "horoteich/origami/trace.hpp"

namespace horoteich::origami {

/// Point of the surface: square plus local coordinates in [0, 1)^2.
struct SurfacePoint {
  int square = 0;
  Rational x, y;
  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// Generators of GL(2,Z) used for re-tiling:
/// T^k = [[1,k],[0,1]], U^k = [[1,0],[k,1]], S = [[0,-1],[1,0]], R = diag(1,-1).
enum class Generator { T, U, S, R };

inline IntMat2 generator_matrix(Generator g, std::int64_t k = 1) {
  switch (g) {
    case Generator::T:
      return {1, k, 0, 1};
    case Generator::U:
      return {1, 0, k, 1};
    case Generator::S:
      return {0, -1, 1, 0};
    default:
      return {1, 0, 0, -1};
  }
}

struct GeneratorPower {
  Generator gen;
  std::int64_t k = 1;
};

/// Word in the generators whose product (first entry applied first) is m.
inline std::vector<GeneratorPower> generator_word(const IntMat2& m) {
  if (!is_unimodular(m)) throw InvalidInput("re-marking matrix must be an integer matrix of determinant +-1");
  std::vector<GeneratorPower> word;
  IntMat2 cur = m;
  if (m.det() == -1) {
    word.push_back({Generator::R, 1});
    cur = m * generator_matrix(Generator::R);
  }
  // Row reduction W cur = r with W = g_k ... g_1; then cur = g_1^-1 ... g_k^-1 r.
  std::vector<GeneratorPower> left;
  std::int64_t a = cur.a, b = cur.b, c = cur.c, d = cur.d;
  while (c != 0) {
    if (a == 0) {
      // S [[0, b], [c, d]] = [[-c, -d], [0, b]].
      const std::int64_t na = -c, nb = -d;
      c = 0;
      d = b;
      a = na;
      b = nb;
      left.push_back({Generator::S, 1});
    } else if ((a < 0 ? -a : a) >= (c < 0 ? -c : c)) {
      const std::int64_t q = a / c;
      a -= q * c;
      b -= q * d;
      left.push_back({Generator::T, -q});
    } else {
      const std::int64_t q = c / a;
      c -= q * a;
      d -= q * b;
      left.push_back({Generator::U, -q});
    }
  }
  if (a == 1) {
    if (b != 0) word.push_back({Generator::T, b});
  } else {
    // [[-1, b], [0, -1]] = S^2 T^-b.
    if (b != 0) word.push_back({Generator::T, -b});
    word.push_back({Generator::S, 1});
    word.push_back({Generator::S, 1});
  }
  for (std::size_t k = left.size(); k-- > 0;) {
    if (left[k].gen == Generator::S) {
      for (int r = 0; r < 3; ++r) word.push_back({Generator::S, 1});
    } else {
      word.push_back({left[k].gen, -left[k].k});
    }
  }

  IntMat2 prod = IntMat2::identity();
  for (const auto& g : word) prod = generator_matrix(g.gen, g.k) * prod;
  if (!(prod == m)) throw ConsistencyFailure("generator word does not multiply back to the matrix");
  return word;
}

namespace detail {

inline Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::int64_t e = k < 0 ? -k : k;
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = static_cast<int>(i);
  while (e > 0) {
    if (e & 1) out = compose(base, out);
    base = compose(base, base);
    e >>= 1;
  }
  return out;
}

/// Re-tiling of g^k . o. New square i keeps the image of the lower-left
/// corner of old square i as its lower-left corner.
inline Origami apply_generator(const Origami& o, const GeneratorPower& g) {
  switch (g.gen) {
    case Generator::T:
      return Origami(o.h(), compose(o.v(), power(o.h(), -g.k)));
    case Generator::U:
      return Origami(compose(o.h(), power(o.v(), -g.k)), o.v());
    case Generator::S:
      return Origami(inverse(o.v()), o.h());
    default:
      return Origami(o.h(), inverse(o.v()));
  }
}

inline SurfacePoint wrap(const Origami& o, int sq, Rational x, Rational y) {
  while (x >= 1) {
    x -= 1;
    sq = o.right(sq);
  }
  while (x < 0) {
    x += 1;
    sq = o.left(sq);
  }
  while (y >= 1) {
    y -= 1;
    sq = o.top(sq);
  }
  while (y < 0) {
    y += 1;
    sq = o.bottom(sq);
  }
  return {sq, std::move(x), std::move(y)};
}

inline SurfacePoint map_through(const Origami& after, const GeneratorPower& g, const SurfacePoint& p) {
  const Rational one(1);
  switch (g.gen) {
    case Generator::T:
      return wrap(after, p.square, p.x + Rational(g.k) * p.y, p.y);
    case Generator::U:
      return wrap(after, p.square, p.x, p.y + Rational(g.k) * p.x);
    case Generator::S:
      return wrap(after, p.square, one - p.y, p.x);
    default:
      return wrap(after, p.square, p.x, one - p.y);
  }
}

}  // namespace detail

/// The re-tiled surface m . o together with the induced map on points
/// (the affine homeomorphism with derivative m).
class Remarking {
 public:
  Remarking(const Origami& o, const IntMat2& m) : source_(o), matrix_(m) {
    Origami cur = o;
    for (const auto& g : generator_word(m)) {
      cur = detail::apply_generator(cur, g);
      steps_.push_back({g, cur});
    }
    result_ = cur;
  }

  const Origami& source() const { return source_; }
  const Origami& result() const { return result_ ? *result_ : source_; }
  const IntMat2& matrix() const { return matrix_; }

  /// Image of a non-singular point.
  SurfacePoint map(SurfacePoint p) const {
    p = detail::wrap(source_, p.square, p.x, p.y);
    for (const auto& s : steps_) p = detail::map_through(s.after, s.gen, p);
    return p;
  }

 private:
  struct Step {
    GeneratorPower gen;
    Origami after;
  };
  Origami source_;
  IntMat2 matrix_;
  std::vector<Step> steps_;
  std::optional<Origami> result_;
};

/// m . o re-tiled into unit squares, via the generator word of m.
inline Origami remark_action(const Origami& o, const IntMat2& m) { return Remarking(o, m).result(); }

/// SL(2,Z)-orbit of o up to isomorphism, as canonical forms in discovery order.
inline std::vector<Origami> sl2z_orbit(const Origami& o, std::size_t cap = 100000) {
  std::vector<Origami> out{canonical_form(o)};
  std::set<std::pair<Permutation, Permutation>> seen{{out[0].h(), out[0].v()}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const IntMat2& g : {generator_matrix(Generator::T), generator_matrix(Generator::S)}) {
      Origami next = canonical_form(remark_action(out[k], g));
      if (seen.insert({next.h(), next.v()}).second) {
        if (out.size() >= cap) throw BudgetExhausted("SL(2,Z)-orbit exceeds the cap", static_cast<double>(cap));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

/// Whether m stabilizes o up to isomorphism.
inline bool veech_contains(const Origami& o, const IntMat2& m) { return isomorphic(remark_action(o, m), o); }

/// Straight closed leaf in `direction` through p, if p is not on a vertex and
/// the backward ray reaches a start edge without meeting a corner.
inline std::optional<CurveTrace> trace_through_point(const Origami& o, const SurfacePoint& p, IntVec direction) {
  direction = normalize_direction(direction.x, direction.y);
  const std::int64_t a = direction.x, b = direction.y;
  if (a == 0) {
    if (p.x == 0) return std::nullopt;
    return trace_curve(o, {p.square, Edge::Bottom, p.x}, direction);
  }
  int sq = p.square;
  Rational x = p.x, y = p.y;
  const std::size_t cap = 4 * static_cast<std::size_t>(o.n()) * static_cast<std::size_t>(a + (b < 0 ? -b : b) + 1);
  for (std::size_t step = 0; step < cap; ++step) {
    const Rational sx = x / Rational(a);
    std::optional<Rational> sy;
    if (b > 0) sy = y / Rational(b);
    if (b < 0) sy = (Rational(1) - y) / Rational(-b);
    if (!sy || sx < *sy) {
      Rational off = y - sx * Rational(b);
      if (!(off > 0) || !(off < 1)) return std::nullopt;
      return trace_curve(o, {sq, Edge::Left, off}, direction);
    }
    if (sx == *sy) return std::nullopt;
    x -= *sy * Rational(a);
    if (b > 0) {
      sq = o.bottom(sq);
      y = 1;
    } else {
      sq = o.top(sq);
      y = 0;
    }
  }
  throw ConsistencyFailure("backward ray did not reach a left edge");
}

inline SurfacePoint chord_midpoint(const Segment& s) {
  return {s.square, (s.from.x + s.to.x) / 2, (s.from.y + s.to.y) / 2};
}

/// Image of a trace under the affine map of a re-marking.
inline CurveTrace map_trace(const Remarking& rm, const CurveTrace& t) {
  if (!(rm.source() == t.surface())) throw InvalidInput("trace does not live on the re-marked origami");
  const IntMat2& m = rm.matrix();
  const IntVec d{m.a * t.direction().x + m.b * t.direction().y, m.c * t.direction().x + m.d * t.direction().y};
  for (const auto& s : t.segments()) {
    if (auto img = trace_through_point(rm.result(), rm.map(chord_midpoint(s)), d)) return *img;
  }
  throw ConsistencyFailure("every chord midpoint of the trace maps onto a corner line");
}

/// Image of a trace under the affine automorphism with derivative m, for m in
/// the Veech group of the trace's origami.
inline CurveTrace apply_affine(const IntMat2& m, const CurveTrace& t) {
  const Remarking rm(t.surface(), m);
  const auto sigma = find_isomorphism(rm.result(), t.surface());
  if (!sigma) throw InvalidInput("matrix is not in the Veech group of the origami");
  const IntVec d{m.a * t.direction().x + m.b * t.direction().y, m.c * t.direction().x + m.d * t.direction().y};
  for (const auto& s : t.segments()) {
    SurfacePoint q = rm.map(chord_midpoint(s));
    q.square = (*sigma)[q.square];
    if (auto img = trace_through_point(t.surface(), q, d)) return *img;
  }
  throw ConsistencyFailure("every chord midpoint of the trace maps onto a corner line");
}

/// Isotopy class of a closed geodesic: its direction and the index of its
/// maximal cylinder among the cylinders of that direction.
struct CurveKey {
  IntVec direction{1, 0};
  int cylinder = 0;
  friend bool operator==(const CurveKey& a, const CurveKey& b) {
    return a.direction == b.direction && a.cylinder == b.cylinder;
  }
  friend bool operator<(const CurveKey& a, const CurveKey& b) {
    return std::tie(a.direction.x, a.direction.y, a.cylinder) < std::tie(b.direction.x, b.direction.y, b.cylinder);
  }
};

struct TraceCylinder {
  CurveKey key;
  std::int64_t multiplicity = 1;  // holonomy = multiplicity * direction
  std::int64_t height = 1;        // in lattice units of the re-tiled surface
  std::int64_t area = 1;
};

/// Maximal cylinder containing a trace: re-tile by m with m d = (1, 0), then
/// read off the horizontal cylinder containing the image of the trace.
inline TraceCylinder enclosing_cylinder(const CurveTrace& t) {
  const IntVec d = t.direction();
  const Bezout bz = bezout(d.x, d.y);
  const IntMat2 m{bz.x * bz.g, bz.y * bz.g, -d.y, d.x};
  const Remarking rm(t.surface(), m);
  const SurfacePoint q = rm.map(chord_midpoint(t.segments().front()));
  const CylinderDecomposition deco = cylinder_decomposition(rm.result(), Axis::Horizontal);
  const int idx = deco.cylinder_of[q.square];
  const CylinderCurve& c = deco.cylinders[idx];
  const std::int64_t mult = d.x != 0 ? t.holonomy().x / d.x : t.holonomy().y / d.y;
  if (mult != c.circumference) throw ConsistencyFailure("trace holonomy disagrees with its cylinder circumference");
  return {{d, idx}, mult, c.height, c.area()};
}

inline CurveKey isotopy_key(const CurveTrace& t) { return enclosing_cylinder(t).key; }

}  // namespace horoteich::origami
