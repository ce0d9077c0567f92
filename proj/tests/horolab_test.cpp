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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "horoteich/horolab.hpp"

namespace horoteich::horolab {
namespace {

using torus::TorusCurve;
using torus::WeightedTorusFoliation;
using TorusSpec = HoroSpec<WeightedTorusFoliation>;
using OrigamiSpec = HoroSpec<origami::MulticurveFoliation>;

const TorusBackend kTorus;

WeightedTorusFoliation curve(std::int64_t p, std::int64_t q, Rational w = Rational(1)) {
  return WeightedTorusFoliation(std::move(w), TorusCurve(p, q));
}

TorusCurve random_curve(std::mt19937_64& rng, int bound = 6) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    const int p = d(rng), q = d(rng);
    if ((p != 0 || q != 0) && gcd64(p, q) == 1) return TorusCurve(p, q);
  }
}

Rational random_level(std::mt19937_64& rng) {
  return make_rational(1 + static_cast<std::int64_t>(rng() % 50), 1 + static_cast<std::int64_t>(rng() % 50));
}

UpperHalfPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-2.0, 2.0), lim(std::log(0.25), std::log(4.0));
  return UpperHalfPoint(re(rng), std::exp(lim(rng)));
}

origami::Origami l_origami() { return origami::Origami::from_one_based({2, 1, 3}, {3, 2, 1}); }

RelationTag mirror(RelationTag t) {
  if (t == RelationTag::NestedForward) return RelationTag::NestedBackward;
  if (t == RelationTag::NestedBackward) return RelationTag::NestedForward;
  return t;
}

TEST(Backends, ExtScalesQuadratically) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const UpperHalfPoint x = random_point(rng);
    const WeightedTorusFoliation f(Rational(1), random_curve(rng));
    const Rational c = random_level(rng);
    const double c2 = to_double(c * c);
    EXPECT_NEAR(kTorus.ext(x, kTorus.scale(f, c)).lo(), c2 * kTorus.ext(x, f).lo(), 1e-12 * c2 * kTorus.ext(x, f).hi());
  }
  const OrigamiBackend ob(l_origami());
  const auto f = origami::vertical_foliation(l_origami());
  const auto x = origami::horocycle_flow(origami::geodesic_flow(ob.base_point(), 0.3), 1.2);
  const Bracket e = ob.ext(x, f), e3 = ob.ext(x, ob.scale(f, Rational(3)));
  EXPECT_NEAR(e3.lo(), 9.0 * e.lo(), 1e-12 * e3.lo());
  EXPECT_NEAR(e3.hi(), 9.0 * e.hi(), 1e-12 * e3.hi());
}

TEST(Backends, IntersectSymmetricNonnegative) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const auto f = curve(1, 0), g = WeightedTorusFoliation(random_level(rng), random_curve(rng));
    EXPECT_EQ(kTorus.intersect(f, g), kTorus.intersect(g, f));
    EXPECT_GE(kTorus.intersect(f, g), 0);
  }
  const OrigamiBackend ob(l_origami());
  const auto v = origami::vertical_foliation(l_origami()), h = origami::horizontal_foliation(l_origami());
  EXPECT_EQ(ob.intersect(v, h), ob.intersect(h, v));
  EXPECT_EQ(ob.intersect(v, h), Rational(3));
}

TEST(Classify, TorusExamples) {
  EXPECT_EQ(classify(TorusSpec(curve(1, 0), Rational(1)), TorusSpec(curve(0, 1), Rational(1)), kTorus).tag,
            RelationTag::Tangent);
  EXPECT_EQ(classify(TorusSpec(curve(1, 0), make_rational(1, 2)), TorusSpec(curve(0, 1), Rational(1)), kTorus).tag,
            RelationTag::DisjointBalls);
  EXPECT_EQ(classify(TorusSpec(curve(1, 0), Rational(2)), TorusSpec(curve(0, 1), Rational(1)), kTorus).tag,
            RelationTag::Overlapping);
}

TEST(Classify, TangentIsCodimensionOne) {
  std::mt19937_64 rng(3);
  const Rational eps = make_rational(1, 1000000);
  for (int k = 0; k < 200; ++k) {
    const TorusCurve a = random_curve(rng), b = random_curve(rng);
    const std::int64_t i = torus::intersection(a, b);
    if (i == 0) continue;
    const Rational s = random_level(rng);
    const Rational t = Rational(i * i) / s;
    const WeightedTorusFoliation fa(a), fb(b);
    EXPECT_EQ(classify(TorusSpec(fa, s), TorusSpec(fb, t), kTorus).tag, RelationTag::Tangent);
    EXPECT_EQ(classify(TorusSpec(fa, s + eps), TorusSpec(fb, t), kTorus).tag, RelationTag::Overlapping);
    EXPECT_EQ(classify(TorusSpec(fa, s - eps), TorusSpec(fb, t), kTorus).tag, RelationTag::DisjointBalls);
    EXPECT_EQ(classify(TorusSpec(fa, s), TorusSpec(fb, t + eps), kTorus).tag, RelationTag::Overlapping);
    EXPECT_EQ(classify(TorusSpec(fa, s), TorusSpec(fb, t - eps), kTorus).tag, RelationTag::DisjointBalls);
  }
}

TEST(Classify, SymmetricUnderSwap) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    const TorusCurve a = random_curve(rng, 3), b = rng() % 3 == 0 ? a : random_curve(rng, 3);
    const TorusSpec h1(WeightedTorusFoliation(random_level(rng), a), random_level(rng));
    const TorusSpec h2(WeightedTorusFoliation(random_level(rng), b), random_level(rng));
    const RelationTag t12 = classify(h1, h2, kTorus).tag, t21 = classify(h2, h1, kTorus).tag;
    // Equal horoballs nest both ways.
    const bool same_ball = a == b && h1.level / (h1.foliation.weight * h1.foliation.weight) ==
                                         h2.level / (h2.foliation.weight * h2.foliation.weight);
    if (!same_ball) {
      EXPECT_EQ(t12, mirror(t21));
    }
  }
}

TEST(Classify, TorusNestingMatchesSampledBalls) {
  // HS(2 (1,0), 2) = HS((1,0), 1/2) sits inside HB((1,0), 1).
  const TorusSpec h1(curve(1, 0), Rational(1)), h2(curve(1, 0, Rational(2)), Rational(2));
  EXPECT_EQ(classify(h1, h2, kTorus).tag, RelationTag::NestedForward);
  EXPECT_EQ(classify(h2, h1, kTorus).tag, RelationTag::NestedBackward);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const UpperHalfPoint x = random_point(rng);
    if (torus::extremal_length(x, h2.foliation) < 2.0) {
      EXPECT_LT(torus::extremal_length(x, h1.foliation), 1.0);
    }
  }
}

TEST(Classify, OrigamiComponentInsideMulticurve) {
  const OrigamiBackend ob(l_origami());
  const auto full = origami::vertical_foliation(l_origami());
  const auto comp = full.component(0);
  const Rational l2(3);
  const HoroRelation fwd = classify(OrigamiSpec(comp, l2), OrigamiSpec(full, l2), ob);
  EXPECT_EQ(fwd.tag, RelationTag::NestedForward);
  EXPECT_EQ(classify(OrigamiSpec(full, l2), OrigamiSpec(comp, l2), ob).tag, RelationTag::NestedBackward);
  // Component level far below the sampled Ext(F_0) on HS(F, 3): no nesting, balls meet.
  EXPECT_EQ(classify(OrigamiSpec(comp, make_rational(1, 4)), OrigamiSpec(full, l2), ob).tag, RelationTag::Overlapping);
  // Between the sampled lower bound 4/3 and the certified bound 3.
  const HoroRelation mid = classify(OrigamiSpec(comp, Rational(2)), OrigamiSpec(full, l2), ob);
  EXPECT_EQ(mid.tag, RelationTag::Undecided);
  ASSERT_TRUE(mid.bracket.has_value());
  EXPECT_LE(mid.bracket->lo(), 4.0 / 3.0 + 1e-12);
  EXPECT_DOUBLE_EQ(mid.bracket->hi(), 3.0);
  // Two disjoint components, neither preceding the other.
  EXPECT_EQ(classify(OrigamiSpec(comp, l2), OrigamiSpec(full.component(1), l2), ob).tag, RelationTag::Undecided);
  // Transverse foliations use the product rule: i(F_v, F_h) = 3.
  const auto h = origami::horizontal_foliation(l_origami());
  EXPECT_EQ(classify(OrigamiSpec(full, Rational(3)), OrigamiSpec(h, Rational(3)), ob).tag, RelationTag::Tangent);
}

TEST(TripleSolve, Examples) {
  const auto a = triple_solve(Rational(1), Rational(1), Rational(1));
  EXPECT_EQ(a.r, Rational(1));
  const auto b = triple_solve(Rational(2), Rational(3), Rational(6));
  EXPECT_EQ(b.r, Rational(1));
  EXPECT_EQ(b.s, Rational(4));
  EXPECT_EQ(b.t, Rational(9));
  const auto c = triple_solve(Rational(5), Rational(5), Rational(5));
  EXPECT_EQ(c.s, Rational(5));
  EXPECT_THROW(triple_solve(Rational(0), Rational(1), Rational(1)), InvalidInput);
}

TEST(TripleSolve, PairwiseTangentOnTorus) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    const TorusCurve a = random_curve(rng), b = random_curve(rng), g = random_curve(rng);
    const Rational iab(torus::intersection(a, b)), iag(torus::intersection(a, g)), ibg(torus::intersection(b, g));
    if (iab == 0 || iag == 0 || ibg == 0) continue;
    const auto lv = triple_solve(iab, iag, ibg);
    const TorusSpec ha(WeightedTorusFoliation(a), lv.r), hb(WeightedTorusFoliation(b), lv.s),
        hg(WeightedTorusFoliation(g), lv.t);
    EXPECT_EQ(classify(ha, hb, kTorus).tag, RelationTag::Tangent);
    EXPECT_EQ(classify(ha, hg, kTorus).tag, RelationTag::Tangent);
    EXPECT_EQ(classify(hb, hg, kTorus).tag, RelationTag::Tangent);
  }
}

TEST(InclusionProbe, TorusExamples) {
  const auto same = inclusion_probe(TorusSpec(curve(2, 1), Rational(1)), TorusSpec(curve(2, 1), Rational(2)), kTorus);
  EXPECT_EQ(same.outcome, ProbeOutcome::IncludedCertified);
  for (const auto& lv : {std::pair{Rational(1), Rational(1)}, std::pair{make_rational(1, 100), Rational(1000)}}) {
    const auto r = inclusion_probe(TorusSpec(curve(1, 0), lv.first), TorusSpec(curve(0, 1), lv.second), kTorus);
    EXPECT_EQ(r.outcome, ProbeOutcome::ExcludedWitness);
    ASSERT_TRUE(r.witness.has_value());
    // Independent check: on HS((1,0), l1), the witness has Ext((0,1)) beyond level2.
    EXPECT_NEAR(torus::extremal_length(*r.witness, TorusCurve(1, 0)), to_double(lv.first), 1e-9 * to_double(lv.first));
    EXPECT_GT(torus::extremal_length(*r.witness, TorusCurve(0, 1)), to_double(lv.second));
  }
}

TEST(InclusionProbe, RigidityNoInclusionBetweenNonProportional) {
  std::mt19937_64 rng(7);
  int excluded = 0;
  for (int k = 0; k < 10000; ++k) {
    const TorusCurve a = random_curve(rng, 5), b = random_curve(rng, 5);
    if (a == b) continue;
    const auto r = inclusion_probe(TorusSpec(WeightedTorusFoliation(random_level(rng), a), random_level(rng)),
                                   TorusSpec(WeightedTorusFoliation(random_level(rng), b), random_level(rng)), kTorus);
    ASSERT_NE(r.outcome, ProbeOutcome::IncludedCertified);
    if (r.outcome == ProbeOutcome::ExcludedWitness) ++excluded;
  }
  EXPECT_GT(excluded, 9000);
}

TEST(InclusionProbe, OrigamiComponentBound) {
  const OrigamiBackend ob(l_origami());
  const auto full = origami::vertical_foliation(l_origami());
  const auto comp = full.component(0);
  const Rational l1(3);
  // Sup of Ext(F_0) over HS(F, 3) is at most 3.
  EXPECT_EQ(inclusion_probe(OrigamiSpec(full, l1), OrigamiSpec(comp, Rational(3)), ob).outcome,
            ProbeOutcome::IncludedCertified);
  const auto low = inclusion_probe(OrigamiSpec(full, l1), OrigamiSpec(comp, make_rational(1, 4)), ob);
  EXPECT_EQ(low.outcome, ProbeOutcome::ExcludedWitness);
  ASSERT_TRUE(low.witness.has_value());
  EXPECT_NEAR(origami::ext_vertical(*low.witness), 3.0, 1e-12);
  EXPECT_EQ(inclusion_probe(OrigamiSpec(full, l1), OrigamiSpec(comp, Rational(2)), ob).outcome,
            ProbeOutcome::Inconclusive);
}

TEST(BusemannEstimate, TorusTrivialAndOnRay) {
  const UpperHalfPoint x0(0.3, 1.2);
  const auto f = curve(1, 2);
  const auto at = busemann_estimate(x0, f, x0, kTorus, 1e-9);
  EXPECT_TRUE(at.certified);
  EXPECT_NEAR(at.value, 0.0, 1e-9);
  const torus::TorusRay ray(x0, f.curve);
  const auto on = busemann_estimate(x0, f, ray.at(0.7), kTorus, 1e-9);
  EXPECT_TRUE(on.certified);
  EXPECT_NEAR(on.value, -0.7, 1e-8);
}

TEST(BusemannEstimate, TorusMatchesClosedForm) {
  std::mt19937_64 rng(8);
  const double tol = 1e-7;
  for (int k = 0; k < 100; ++k) {
    const UpperHalfPoint x0 = random_point(rng), x = random_point(rng);
    const WeightedTorusFoliation f(random_level(rng), random_curve(rng, 4));
    const auto est = busemann_estimate(x0, f, x, kTorus, tol);
    EXPECT_TRUE(est.certified) << est.trace;
    EXPECT_NEAR(est.value, torus::busemann(x0, f, x), 2 * tol);
    for (std::size_t j = 1; j < est.sequence.size(); ++j) {
      EXPECT_LE(est.sequence[j].second.lo(), est.sequence[j - 1].second.hi() + 1e-12);
    }
  }
}

TEST(BusemannEstimate, OrigamiOnRayOnly) {
  const OrigamiBackend ob(l_origami());
  const auto f = origami::vertical_foliation(l_origami());
  const auto x0 = origami::horocycle_flow(ob.base_point(), 0.5);
  const auto at = busemann_estimate(x0, f, x0, ob, 1e-9);
  EXPECT_TRUE(at.certified);
  EXPECT_NEAR(at.value, 0.0, 1e-9);
  const auto on = busemann_estimate(x0, f, origami::geodesic_flow(x0, 1.5), ob, 1e-9);
  EXPECT_TRUE(on.certified);
  EXPECT_NEAR(on.value, -1.5, 1e-9);
  EXPECT_THROW(busemann_estimate(x0, f, origami::horocycle_flow(x0, 1.0), ob, 1e-9), InvalidInput);
  EXPECT_THROW(busemann_estimate(x0, f.component(0), x0, ob, 1e-9), InvalidInput);
}

TEST(Backends, HorospherePointsLieOnTheHorosphere) {
  const OrigamiBackend ob(l_origami());
  const auto v = origami::vertical_foliation(l_origami()).scaled(make_rational(3, 2));
  const auto h = origami::horizontal_foliation(l_origami());
  for (double s : default_horocycle_samples(6)) {
    const auto xv = ob.horosphere_point(v, Rational(5), s);
    ASSERT_TRUE(xv.has_value());
    EXPECT_NEAR(origami::ext_vertical(*xv) * 9.0 / 4.0, 5.0, 1e-12);
    const auto xh = ob.horosphere_point(h, Rational(5), s);
    ASSERT_TRUE(xh.has_value());
    EXPECT_NEAR(origami::ext_horizontal(*xh), 5.0, 1e-11);
    const auto xt = kTorus.horosphere_point(curve(2, 3, Rational(2)), Rational(5), s);
    EXPECT_NEAR(torus::extremal_length(*xt, curve(2, 3, Rational(2))), 5.0, 1e-9);
  }
  EXPECT_FALSE(ob.horosphere_point(origami::vertical_foliation(l_origami()).component(0), Rational(1), 0.0));
  const auto geo = ob.geodesic(origami::vertical_foliation(l_origami()), h);
  const auto g = geo(0.8);
  EXPECT_NEAR(origami::ext_vertical(g) * origami::ext_horizontal(g), 9.0, 1e-12);
}

}  // namespace
}  // namespace horoteich::horolab
