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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "horoteich/origami.hpp"
#include "oracles.hpp"

namespace horoteich::origami {
namespace {

Origami l_origami() { return Origami::from_one_based({2, 1, 3}, {3, 2, 1}); }

// Three squares, one vertical cylinder, genus 2.
Origami one_vertical_cylinder() { return Origami::from_one_based({2, 1, 3}, {2, 3, 1}); }


std::vector<oracle::Chord> chords(const CurveTrace& t) {
  std::vector<oracle::Chord> out;
  for (const auto& s : t.segments()) out.push_back({s.square, s.from_d.x, s.from_d.y, s.to_d.x, s.to_d.y});
  return out;
}

long oracle_crossings(const CurveTrace& a, const CurveTrace& b) {
  return oracle::chord_crossings(a.surface().h(), a.surface().v(), chords(a), chords(b));
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::optional<Origami> random_origami(std::mt19937_64& rng, int n) {
  try {
    return Origami(random_permutation(rng, n), random_permutation(rng, n));
  } catch (const DisconnectedSurface&) {
    return std::nullopt;
  }
}

std::vector<IntVec> primitive_directions(int bound) {
  std::vector<IntVec> out;
  for (int a = 0; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      if (gcd64(a, b) != 1 || (a == 0 && b < 0)) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

MarkedFlatSurface<Rational> exact(const Origami& o) { return MarkedFlatSurface<Rational>(o); }

TEST(BuildOrigami, SquareTorus) {
  const Origami t = build_origami({0}, {0});
  EXPECT_EQ(t.genus(), 1);
  EXPECT_EQ(t.area(), 1);
  EXPECT_TRUE(t.singularity_orders().empty());
}

TEST(BuildOrigami, LShape) {
  const Origami l = l_origami();
  EXPECT_EQ(l.genus(), 2);
  EXPECT_EQ(l.area(), 3);
  EXPECT_EQ(l.singularity_orders(), std::vector<int>({2}));
}

TEST(BuildOrigami, RejectsDisconnectedWithOrbits) {
  try {
    build_origami({0, 1}, {0, 1});
    FAIL() << "expected rejection";
  } catch (const DisconnectedSurface& e) {
    EXPECT_EQ(e.orbits(), (std::vector<std::vector<int>>{{0}, {1}}));
  }
}

TEST(BuildOrigami, RejectsNonPermutations) {
  EXPECT_THROW(build_origami({0, 0}, {1, 0}), InvalidInput);
  EXPECT_THROW(build_origami({0, 1}, {0}), InvalidInput);
}

TEST(BuildOrigami, InvariantsMatchCornerGluingOracle) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto o = random_origami(rng, n);
    if (!o) continue;
    const auto ref = oracle::corner_classes(o->h(), o->v());
    EXPECT_EQ(o->genus(), ref.genus);
    std::vector<int> orders;
    for (int k : ref.orders) {
      if (k > 0) orders.push_back(k);
    }
    EXPECT_EQ(o->singularity_orders(), orders);
    int total = 0;
    for (int k : orders) total += k;
    EXPECT_EQ(total, 2 * o->genus() - 2);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Cylinders, Examples) {
  const auto torus = cylinders(Origami::square_torus(), Axis::Horizontal);
  ASSERT_EQ(torus.size(), 1u);
  EXPECT_EQ(torus[0].circumference, 1);
  EXPECT_EQ(torus[0].height, 1);
  for (Axis a : {Axis::Horizontal, Axis::Vertical}) {
    const auto cs = cylinders(l_origami(), a);
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(cs[0].circumference, 2);
    EXPECT_EQ(cs[1].circumference, 1);
    EXPECT_EQ(cs[0].height, 1);
    EXPECT_EQ(cs[1].height, 1);
  }
}

TEST(Cylinders, TileTheSurfaceAndAreMaximal) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto o = random_origami(rng, 1 + static_cast<int>(rng() % 7));
    if (!o) continue;
    for (Axis a : {Axis::Horizontal, Axis::Vertical}) {
      const auto deco = cylinder_decomposition(*o, a);
      std::int64_t area = 0;
      for (const auto& c : deco.cylinders) {
        area += c.area();
        EXPECT_EQ(static_cast<std::int64_t>(c.members.size()), c.area());
      }
      EXPECT_EQ(area, o->n());
      if (o->genus() == 1) {
        EXPECT_EQ(deco.cylinders.size(), 1u);
      }
    }
  }
  // A 1x3 torus is one horizontal cylinder of height 3.
  const auto tall = cylinders(Origami::from_one_based({1, 2, 3}, {2, 3, 1}), Axis::Horizontal);
  ASSERT_EQ(tall.size(), 1u);
  EXPECT_EQ(tall[0].height, 3);
}

TEST(Flow, GeodesicGroupLaw) {
  const MarkedFlatSurface<double> x(l_origami());
  const auto g0 = geodesic_flow(x, 0.0);
  EXPECT_EQ(g0.deform().a, 1.0);
  EXPECT_EQ(g0.deform().d, 1.0);
  const auto back = geodesic_flow(geodesic_flow(x, 0.8), -0.8);
  EXPECT_NEAR(back.deform().a, 1.0, 1e-15);
  EXPECT_NEAR(back.deform().d, 1.0, 1e-15);
  EXPECT_THROW(geodesic_flow(x, std::nan("")), InvalidInput);
}

TEST(Flow, CompositionMatchesMatrixProductsExactly) {
  const auto x = exact(l_origami());
  const Rational s = make_rational(7, 3), k = make_rational(5, 2);
  const auto y = horocycle_flow(stretch_flow(horocycle_flow(x, s), k), Rational(-1));
  const Mat2<Rational> expect = horocycle_matrix(Rational(-1)) *
                                Mat2<Rational>{k, Rational(0), Rational(0), Rational(1) / k} *
                                horocycle_matrix(s);
  EXPECT_EQ(y.deform().a, expect.a);
  EXPECT_EQ(y.deform().b, expect.b);
  EXPECT_EQ(y.deform().c, expect.c);
  EXPECT_EQ(y.deform().d, expect.d);
  EXPECT_EQ(y.area(), Rational(3));
  const auto hh = horocycle_flow(horocycle_flow(x, s), k);
  const auto h2 = horocycle_flow(x, Rational(s + k));
  EXPECT_EQ(hh.deform().c, h2.deform().c);
}

TEST(ExtVertical, Examples) {
  const MarkedFlatSurface<double> x(l_origami());
  EXPECT_DOUBLE_EQ(ext_vertical(x), 3.0);
  EXPECT_NEAR(ext_vertical(geodesic_flow(x, 0.5 * std::log(2.0))), 1.5, 1e-14);
  EXPECT_DOUBLE_EQ(ext_vertical(horocycle_flow(x, 7.0)), 3.0);
  const auto q = exact(l_origami());
  EXPECT_EQ(ext_vertical(q), Rational(3));
  EXPECT_EQ(ext_vertical(stretch_flow(q, Rational(2))), make_rational(3, 4));
  EXPECT_EQ(ext_vertical(horocycle_flow(q, Rational(7))), Rational(3));
}

TEST(ExtVertical, ProductLawAndHorocycleInvarianceExact) {
  std::mt19937_64 rng(3);
  const auto base = horocycle_flow(exact(l_origami()), make_rational(2, 7));
  const Rational e0 = ext_vertical(base);
  for (int k = 0; k < 25; ++k) {
    const Rational f = make_rational(1 + static_cast<std::int64_t>(rng() % 40), 1 + static_cast<std::int64_t>(rng() % 40));
    const auto g = stretch_flow(horocycle_flow(exact(l_origami()), Rational(0)), f);
    EXPECT_EQ(ext_vertical(g) * ext_horizontal(g), Rational(9));
    const Rational s = make_rational(static_cast<std::int64_t>(rng() % 201) - 100, 1 + static_cast<std::int64_t>(rng() % 9));
    EXPECT_EQ(ext_vertical(horocycle_flow(base, s)), e0);
  }
}

TEST(TraceCurve, Examples) {
  const Origami t = Origami::square_torus();
  const CurveTrace core = trace_curve(t, {0, Edge::Left, make_rational(1, 2)}, {1, 0});
  EXPECT_EQ(core.segments().size(), 1u);
  EXPECT_EQ(core.holonomy(), (IntVec{1, 0}));
  const CurveTrace half = trace_from(t, 0, slope_direction(make_rational(1, 2)));
  EXPECT_EQ(half.holonomy(), (IntVec{2, 1}));
  const CurveTrace vert = trace_from(l_origami(), 1, vertical_direction());
  EXPECT_EQ(vert.segments().size(), 1u);
  EXPECT_EQ(vert.holonomy(), (IntVec{0, 1}));
  EXPECT_FALSE(vert.slope().has_value());
}

TEST(TraceCurve, SegmentsChainThroughTheGluings) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto o = random_origami(rng, 2 + static_cast<int>(rng() % 5));
    if (!o) continue;
    for (const IntVec& d : primitive_directions(3)) {
      const CurveTrace t = trace_from(*o, static_cast<int>(rng() % o->n()), d);
      const auto& seg = t.segments();
      for (std::size_t k = 0; k < seg.size(); ++k) {
        const Segment& s = seg[k];
        const Segment& nx = seg[(k + 1) % seg.size()];
        EXPECT_EQ(cross(s.to - s.from, RatVec{Rational(d.x), Rational(d.y)}), 0);
        // Next chord starts where this one leaves, across the glued edge.
        const bool right = s.to.x == 1, up = s.to.y == 1, down = s.to.y == 0 && d.y < 0;
        int sq = s.square;
        if (right && (up || down)) {
          sq = up ? o->right(o->top(sq)) : o->bottom(o->right(sq));
        } else if (right) {
          sq = o->right(sq);
        } else if (up) {
          sq = o->top(sq);
        } else if (down) {
          sq = o->bottom(sq);
        }
        EXPECT_EQ(nx.square, sq);
      }
      EXPECT_EQ(cross(RatVec{Rational(t.holonomy().x), Rational(t.holonomy().y)}, RatVec{Rational(d.x), Rational(d.y)}), 0);
    }
  }
}

TEST(TraceCurve, SingularVertexSignalsRetry) {
  // From (0, 1/2) with slope 1/2 the line runs into the corner (1, 1).
  try {
    trace_curve(l_origami(), {0, Edge::Left, make_rational(1, 2)}, {2, 1});
    FAIL() << "expected a singularity hit";
  } catch (const SingularityHit& e) {
    EXPECT_EQ(e.suggested_offset(), make_rational(1, 6));
  }
  EXPECT_NO_THROW(trace_from(l_origami(), 0, {2, 1}));
  EXPECT_THROW(trace_curve(l_origami(), {0, Edge::Left, Rational(0)}, {1, 0}), InvalidInput);
  EXPECT_THROW(trace_curve(l_origami(), {0, Edge::Left, make_rational(1, 2)}, {0, 1}), InvalidInput);
}

TEST(CrossingNumber, TorusExamples) {
  const Origami t = Origami::square_torus();
  EXPECT_EQ(crossing_number(trace_from(t, 0, {1, 0}), trace_from(t, 0, {0, 1})), 1);
  const CurveTrace a = trace_from(t, 0, slope_direction(Rational(2)));
  const CurveTrace b = trace_from(t, 0, slope_direction(make_rational(1, 3)));
  EXPECT_EQ(a.holonomy(), (IntVec{1, 2}));
  EXPECT_EQ(b.holonomy(), (IntVec{3, 1}));
  EXPECT_EQ(crossing_number(a, b), 5);
}

TEST(CrossingNumber, TorusAgreesWithDeterminantAndIsSymmetric) {
  const Origami t = Origami::square_torus();
  const auto dirs = primitive_directions(8);
  std::vector<CurveTrace> traces;
  for (const auto& d : dirs) traces.push_back(trace_from(t, 0, d));
  for (std::size_t i = 0; i < traces.size(); ++i) {
    for (std::size_t j = 0; j < traces.size(); ++j) {
      const std::int64_t expect = std::abs(dirs[i].x * dirs[j].y - dirs[i].y * dirs[j].x);
      const std::int64_t got = crossing_number(traces[i], traces[j]);
      ASSERT_EQ(got, expect) << dirs[i].x << "," << dirs[i].y << " vs " << dirs[j].x << "," << dirs[j].y;
      ASSERT_EQ(got, crossing_number(traces[j], traces[i]));
    }
  }
}

TEST(CrossingNumber, LCylinderCores) {
  const Origami l = l_origami();
  const auto hs = cylinders(l, Axis::Horizontal);
  const auto vs = cylinders(l, Axis::Vertical);
  const std::int64_t expect[2][2] = {{1, 1}, {1, 0}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const CurveTrace a = cylinder_core(l, hs[i]), b = cylinder_core(l, vs[j]);
      EXPECT_EQ(crossing_number(a, b), expect[i][j]);
      EXPECT_EQ(crossing_number(a, b), oracle_crossings(a, b));
    }
  }
  EXPECT_EQ(crossing_number(cylinder_core(l, hs[0]), cylinder_core(l, hs[1])), 0);
  EXPECT_EQ(crossing_number(cylinder_core(l, hs[0]), cylinder_core(l, hs[0])), 0);
}

TEST(CrossingNumber, MatchesSegmentScanOnRandomOrigamis) {
  std::mt19937_64 rng(23);
  const auto dirs = primitive_directions(3);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto o = random_origami(rng, 3 + static_cast<int>(rng() % 4));
    if (!o) continue;
    for (int k = 0; k < 10; ++k) {
      const IntVec d1 = dirs[rng() % dirs.size()], d2 = dirs[rng() % dirs.size()];
      if (d1 == d2) continue;
      const CurveTrace a = trace_from(*o, static_cast<int>(rng() % o->n()), d1);
      const CurveTrace b = trace_from(*o, static_cast<int>(rng() % o->n()), d2);
      EXPECT_EQ(crossing_number(a, b), oracle_crossings(a, b));
      EXPECT_EQ(crossing_number(a, b), crossing_number(b, a));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(CrossingNumber, RejectsDifferentSurfaces) {
  EXPECT_THROW(crossing_number(trace_from(l_origami(), 0, {1, 0}), trace_from(Origami::square_torus(), 0, {0, 1})),
               InvalidInput);
}

TEST(IntersectionWithFoliation, Examples) {
  const Origami l = l_origami();
  const CurveTrace h1 = cylinder_core(l, cylinders(l, Axis::Horizontal)[0]);
  const auto x = exact(l);
  EXPECT_EQ(i_with_foliation(h1, Axis::Vertical, x), Rational(2));
  EXPECT_EQ(i_with_foliation(h1, Axis::Horizontal, x), Rational(0));
  EXPECT_EQ(i_with_foliation(h1, Axis::Vertical, horocycle_flow(x, make_rational(9, 2))), Rational(2));
  // Against the canonical vertical foliation as a sum of crossings.
  EXPECT_EQ(intersection(vertical_foliation(l), h1), Rational(2));
}

TEST(ExtBracket, Examples) {
  const Origami t = Origami::square_torus();
  const auto et = ext_bracket(trace_from(t, 0, {1, 0}), exact(t));
  EXPECT_EQ(et.lo, Rational(1));
  EXPECT_EQ(et.hi, Rational(1));
  const Origami l = l_origami();
  const CurveTrace h1 = cylinder_core(l, cylinders(l, Axis::Horizontal)[0]);
  const auto el = ext_bracket(h1, exact(l));
  EXPECT_EQ(el.lo, make_rational(4, 3));
  EXPECT_EQ(el.hi, Rational(2));
  const auto es = ext_bracket(h1, stretch_flow(exact(l), Rational(3)));
  EXPECT_EQ(es.lo, el.lo * 9);
  EXPECT_EQ(es.hi, el.hi * 9);
  const auto ed = ext_bracket(h1, geodesic_flow(MarkedFlatSurface<double>(l), 0.3));
  EXPECT_NEAR(ed.lo, 4.0 / 3.0 * std::exp(0.6), 1e-14);
  EXPECT_NEAR(ed.hi, 2.0 * std::exp(0.6), 1e-14);
  EXPECT_LE(ed.certified().lo(), ed.lo);
  EXPECT_GE(ed.certified().hi(), ed.hi);
}

TEST(ExtBracket, GeneralSlopeUsesEnclosingCylinder) {
  const Origami l = l_origami();
  std::mt19937_64 rng(9);
  for (const auto& d : primitive_directions(4)) {
    const CurveTrace c = trace_from(l, static_cast<int>(rng() % 3), d);
    const TraceCylinder cyl = enclosing_cylinder(c);
    const auto e = ext_bracket(c, exact(l));
    EXPECT_LE(e.lo, e.hi);
    EXPECT_LE(cyl.area, 3);
    EXPECT_EQ(e.hi * Rational(cyl.area), Rational(c.holonomy().x * c.holonomy().x + c.holonomy().y * c.holonomy().y));
  }
  // Torus: every closed geodesic fills the surface, so the bracket is exact.
  for (const auto& d : primitive_directions(5)) {
    const CurveTrace c = trace_from(Origami::square_torus(), 0, d);
    const auto e = ext_bracket(c, horocycle_flow(exact(Origami::square_torus()), make_rational(1, 3)));
    EXPECT_EQ(e.lo, e.hi);
  }
}

TEST(ExtBracket, MinskyInequalityOnRandomMarkings) {
  const Origami l = l_origami();
  std::vector<CurveTrace> curves;
  for (Axis a : {Axis::Horizontal, Axis::Vertical}) {
    for (const auto& c : cylinders(l, a)) curves.push_back(cylinder_core(l, c));
  }
  for (const auto& d : std::vector<IntVec>{{1, 1}, {1, -1}, {2, 1}, {1, 2}}) curves.push_back(trace_from(l, 0, d));
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    Mat2<double> m{u(rng), u(rng), u(rng), u(rng)};
    if (m.det() < 0) std::swap(m.a, m.b), std::swap(m.c, m.d);
    if (m.det() < 1e-3) continue;
    const MarkedFlatSurface<double> x(l, m);
    for (std::size_t i = 0; i < curves.size(); ++i) {
      for (std::size_t j = 0; j < curves.size(); ++j) {
        const double in = static_cast<double>(crossing_number(curves[i], curves[j]));
        const double bound = ext_bracket(curves[i], x).hi * ext_bracket(curves[j], x).hi;
        EXPECT_GE(bound - in * in, -1e-12 * (1.0 + bound));
      }
    }
  }
}

TEST(ExtBracket, MulticurveBracket) {
  const Origami l = l_origami();
  const auto f = vertical_foliation(l);
  const auto b = ext_bracket(f, MarkedFlatSurface<double>(l));
  // Ext of the canonical foliation is the area, inside the bracket.
  EXPECT_LE(b.lo, 3.0 + 1e-12);
  EXPECT_GE(b.hi, 3.0 - 1e-12);
  const auto g = horocycle_flow(geodesic_flow(MarkedFlatSurface<double>(l), 0.4), 1.7);
  const auto bg = ext_bracket(f, g);
  EXPECT_NEAR(bg.hi, ext_vertical(g), 1e-12);
  EXPECT_LE(bg.lo, ext_vertical(g) + 1e-12);
}

TEST(HorocycleGrowth, Examples) {
  const Origami l = l_origami();
  const CurveTrace h1 = cylinder_core(l, cylinders(l, Axis::Horizontal)[0]);
  const MarkedFlatSurface<double> x(l);
  const auto rep = horocycle_growth_check(h1, x, {0.0, 10.0});
  EXPECT_TRUE(rep.ok);
  EXPECT_DOUBLE_EQ(rep.i_v, 2.0);
  EXPECT_DOUBLE_EQ(rep.i_h, 0.0);
  EXPECT_GE(rep.samples[1].lo, 400.0 / 3.0 - 1e-9);
  EXPECT_NEAR(rep.samples[1].lo, (4.0 + 400.0) / 3.0, 1e-9);
  EXPECT_TRUE(rep.samples[0].ok);
  const CurveTrace v1 = cylinder_core(l, cylinders(l, Axis::Vertical)[0]);
  EXPECT_THROW(horocycle_growth_check(v1, x, {1.0}), InvalidInput);
}

TEST(HorocycleGrowth, QuadraticFit) {
  const Origami l = l_origami();
  const CurveTrace c = trace_from(l, 0, {2, 1});
  std::vector<double> s;
  for (int k = -20; k <= 20; ++k) s.push_back(0.5 * k);
  const auto rep = horocycle_growth_check(c, geodesic_flow(MarkedFlatSurface<double>(l), 0.2), s);
  EXPECT_TRUE(rep.ok);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_LT(rep.fit_residual, 1e-9);
  EXPECT_NEAR(rep.fit[2], rep.i_v * rep.i_v / rep.area, 1e-9);
}

TEST(DistanceBracket, ContainsGeodesicTime) {
  const MarkedFlatSurface<double> x(l_origami());
  for (double t : {0.0, 0.5, 2.0}) {
    const Bracket d = distance_bracket(x, geodesic_flow(x, t));
    EXPECT_LE(d.lo(), t + 1e-12);
    EXPECT_GE(d.hi(), t - 1e-12);
    EXPECT_NEAR(d.hi(), t, 1e-12);
  }
  const Bracket h = distance_bracket(x, horocycle_flow(x, 3.0));
  EXPECT_LE(h.lo(), h.hi());
}

TEST(BusemannRay, OneCylinderOrigami) {
  const Origami o = one_vertical_cylinder();
  ASSERT_EQ(cylinders(o, Axis::Vertical).size(), 1u);
  ASSERT_EQ(o.genus(), 2);
  const auto rep = busemann_ray_check(o, {0.0, 1.0, 2.5});
  EXPECT_TRUE(rep.all_agree);
  EXPECT_NEAR(rep.samples[0].closed_form, 0.0, 1e-15);
  EXPECT_NEAR(rep.samples[1].closed_form, -1.0, 1e-14);
  EXPECT_LE(rep.samples[1].definition.lo(), -1.0 + 1e-12);
  EXPECT_GE(rep.samples[1].definition.hi(), -1.0 - 1e-12);
  EXPECT_THROW(busemann_ray_check(l_origami(), {1.0}), InvalidInput);
}

TEST(WalshE, TorusAndSingleComponent) {
  const Origami t = Origami::square_torus();
  const auto f = vertical_foliation(t);
  const auto x = exact(t);
  EXPECT_EQ(walsh_E(f, trace_from(t, 0, {1, 1}), x), Rational(1));
  const Origami l = l_origami();
  const CurveTrace h1 = cylinder_core(l, cylinders(l, Axis::Horizontal)[0]);
  const auto fl = vertical_foliation(l).component(0);
  const Rational i = Rational(crossing_number(fl.cores()[0], h1));
  EXPECT_EQ(walsh_E(fl, h1, exact(l)), i * i / i_with_foliation(fl.cores()[0], Axis::Horizontal, exact(l)));
}

TEST(WalshE, LWithCircumferenceWeights) {
  const Origami l = l_origami();
  std::vector<WeightedCylinder> comps;
  for (const auto& c : cylinders(l, Axis::Vertical)) comps.push_back({Rational(c.circumference), c});
  const MulticurveFoliation f(l, comps);
  const CurveTrace gamma = cylinder_core(l, cylinders(l, Axis::Horizontal)[0]);
  Rational expect(0);
  for (const auto& c : comps) {
    const Rational i = Rational(oracle_crossings(cylinder_core(l, c.curve), gamma));
    const Rational w = c.weight;
    expect += (w * i) * (w * i) / (w * Rational(c.curve.circumference));
  }
  EXPECT_EQ(walsh_E(f, gamma, exact(l)), expect);
  EXPECT_EQ(expect, Rational(2));
  EXPECT_THROW(walsh_E(horizontal_foliation(l), gamma, exact(l)), InvalidInput);
}

TEST(Foliation, ErgodicComponentsAreDisjoint) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto o = random_origami(rng, 2 + static_cast<int>(rng() % 5));
    if (!o) continue;
    const auto f = vertical_foliation(*o);
    EXPECT_EQ(f.components().size(), cylinders(*o, Axis::Vertical).size());
    for (std::size_t i = 0; i < f.cores().size(); ++i) {
      for (std::size_t j = 0; j < f.cores().size(); ++j) EXPECT_EQ(crossing_number(f.cores()[i], f.cores()[j]), 0);
    }
  }
  EXPECT_EQ(vertical_foliation(l_origami()).components().size(), 2u);
  EXPECT_THROW(MulticurveFoliation(l_origami(), {}), InvalidInput);
}

TEST(SmallIntersection, LVerticalCylinders) {
  const Origami l = l_origami();
  const auto f = vertical_foliation(l);
  const std::vector<MulticurveFoliation> comps{f.component(0), f.component(1)};
  const auto res = small_intersection_search(comps, make_rational(1, 4), 5000);
  const long i0 = oracle_crossings(comps[0].cores()[0], res.witness);
  const long i1 = oracle_crossings(comps[1].cores()[0], res.witness);
  EXPECT_GT(i0, 0);
  EXPECT_LT(4 * i1, i0);
  EXPECT_EQ(res.intersections[0], Rational(i0));
  EXPECT_EQ(res.intersections[1], Rational(i1));
  EXPECT_LT(res.ratio, make_rational(1, 4));
}

TEST(SmallIntersection, SingleComponentAndValidation) {
  const Origami l = l_origami();
  const auto f = vertical_foliation(l);
  const auto res = small_intersection_search({f.component(1)}, Rational(1), 100);
  EXPECT_GT(res.intersections[0], 0);
  EXPECT_THROW(small_intersection_search({f.component(0)}, Rational(0), 100), InvalidInput);
  const auto h = horizontal_foliation(l);
  EXPECT_THROW(small_intersection_search({f.component(0), h.component(0)}, Rational(1), 100), InvalidInput);
  EXPECT_THROW(small_intersection_search({f}, Rational(1), 100), InvalidInput);
}

TEST(SmallIntersection, BudgetExhaustionReportsBest) {
  const Origami l = l_origami();
  const auto f = vertical_foliation(l);
  // i(F_1, .) / i(F_0, .) < 1e-9 needs far more than three candidates.
  EXPECT_THROW(small_intersection_search({f.component(1), f.component(0)}, make_rational(1, 1000000000), 3),
               BudgetExhausted);
}

TEST(RemarkAction, Examples) {
  const Origami l = l_origami();
  EXPECT_EQ(remark_action(l, IntMat2::identity()), l);
  EXPECT_TRUE(isomorphic(remark_action(Origami::square_torus(), generator_matrix(Generator::T)), Origami::square_torus()));
  const Origami tl = remark_action(l, generator_matrix(Generator::T));
  const auto ref = oracle::corner_classes(tl.h(), tl.v());
  EXPECT_EQ(ref.genus, 2);
  EXPECT_EQ(tl.area(), 3);
  EXPECT_EQ(tl.singularity_orders(), std::vector<int>({2}));
  EXPECT_THROW(remark_action(l, IntMat2{2, 0, 0, 1}), InvalidInput);
}

TEST(RemarkAction, HorizontalShearKeepsHorizontalCylinders) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto o = random_origami(rng, 2 + static_cast<int>(rng() % 5));
    if (!o) continue;
    const Origami t = remark_action(*o, generator_matrix(Generator::T, 3));
    EXPECT_EQ(t.h(), o->h());
  }
}

TEST(RemarkAction, MatchesCutAndRegluingOracle) {
  std::mt19937_64 rng(13);
  std::vector<IntMat2> ms{generator_matrix(Generator::T), generator_matrix(Generator::U), generator_matrix(Generator::S),
                          generator_matrix(Generator::R), {2, 1, 1, 1}, {1, -2, 1, -1}, {3, 2, 1, 1}, {0, 1, 1, 0},
                          {-1, 0, 0, -1}, {5, 3, -2, -1}};
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto o = random_origami(rng, 1 + static_cast<int>(rng() % 6));
    if (!o) continue;
    for (const auto& m : ms) {
      const auto ref = oracle::retile(o->h(), o->v(), {m.a, m.b, m.c, m.d});
      ASSERT_TRUE(ref.has_value());
      const Origami got = remark_action(*o, m);
      EXPECT_TRUE(isomorphic(got, Origami(ref->first, ref->second)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(RemarkAction, GroupActionOnOrbits) {
  std::mt19937_64 rng(19);
  const std::vector<IntMat2> ms{{1, 1, 0, 1}, {0, -1, 1, 0}, {2, 1, 1, 1}, {1, 0, -3, 1}, {1, 0, 0, -1}};
  for (int trial = 0; trial < 30; ++trial) {
    const auto o = random_origami(rng, 2 + static_cast<int>(rng() % 5));
    if (!o) continue;
    for (const auto& a : ms) {
      for (const auto& b : ms) {
        EXPECT_TRUE(isomorphic(remark_action(remark_action(*o, a), b), remark_action(*o, b * a)));
      }
    }
    const auto orbit = sl2z_orbit(*o);
    for (const auto& p : orbit) {
      EXPECT_EQ(p.genus(), o->genus());
      EXPECT_EQ(p.singularity_orders(), o->singularity_orders());
      EXPECT_EQ(p.area(), o->area());
      // Closed under the generators.
      for (const auto& g : {generator_matrix(Generator::T), generator_matrix(Generator::S)}) {
        const Origami q = canonical_form(remark_action(p, g));
        EXPECT_TRUE(std::find(orbit.begin(), orbit.end(), q) != orbit.end());
      }
    }
  }
  EXPECT_EQ(sl2z_orbit(l_origami()).size(), 3u);
  EXPECT_EQ(sl2z_orbit(Origami::square_torus()).size(), 1u);
}

TEST(RemarkAction, TracesMapWithCrossingsPreserved) {
  const Origami l = l_origami();
  std::vector<CurveTrace> curves;
  for (const auto& d : primitive_directions(2)) curves.push_back(trace_from(l, 0, d));
  for (const auto& m : std::vector<IntMat2>{{1, 1, 0, 1}, {2, 1, 1, 1}, {0, -1, 1, 0}, {1, 0, 0, -1}}) {
    const Remarking rm(l, m);
    std::vector<CurveTrace> img;
    for (const auto& c : curves) {
      img.push_back(map_trace(rm, c));
      const IntVec expect = normalize_direction(m.a * c.direction().x + m.b * c.direction().y,
                                                m.c * c.direction().x + m.d * c.direction().y);
      EXPECT_EQ(img.back().direction(), expect);
      EXPECT_EQ(img.back().surface(), rm.result());
      EXPECT_EQ(enclosing_cylinder(img.back()).area, enclosing_cylinder(c).area);
    }
    for (std::size_t i = 0; i < curves.size(); ++i) {
      for (std::size_t j = 0; j < curves.size(); ++j) {
        EXPECT_EQ(crossing_number(img[i], img[j]), crossing_number(curves[i], curves[j]));
      }
    }
  }
}

TEST(RemarkAction, VeechGroupAndAffineMaps) {
  const Origami l = l_origami();
  EXPECT_TRUE(veech_contains(l, generator_matrix(Generator::S)));
  EXPECT_TRUE(veech_contains(l, generator_matrix(Generator::T, 2)));
  EXPECT_FALSE(veech_contains(l, generator_matrix(Generator::T)));
  const auto hs = cylinders(l, Axis::Horizontal);
  const auto vs = cylinders(l, Axis::Vertical);
  const CurveTrace h1 = cylinder_core(l, hs[0]);
  const CurveTrace img = apply_affine(generator_matrix(Generator::S), h1);
  EXPECT_EQ(img.direction(), (IntVec{0, 1}));
  EXPECT_EQ(isotopy_key(img), isotopy_key(cylinder_core(l, vs[0])));
  EXPECT_THROW(apply_affine(generator_matrix(Generator::T), h1), InvalidInput);
}

TEST(IsotopyKey, SameLeafSameKeyDifferentCylindersDiffer) {
  const Origami l = l_origami();
  const CurveTrace a = trace_curve(l, {0, Edge::Left, make_rational(1, 3)}, {1, 0});
  const CurveTrace b = trace_curve(l, {1, Edge::Left, make_rational(2, 3)}, {1, 0});
  const CurveTrace c = trace_curve(l, {2, Edge::Left, make_rational(1, 2)}, {1, 0});
  EXPECT_EQ(isotopy_key(a), isotopy_key(b));
  EXPECT_FALSE(isotopy_key(a) == isotopy_key(c));
  EXPECT_EQ(enclosing_cylinder(a).area, 2);
  EXPECT_EQ(enclosing_cylinder(c).area, 1);
}

}  // namespace
}  // namespace horoteich::origami
