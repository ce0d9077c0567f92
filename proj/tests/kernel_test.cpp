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

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "horoteich/kernel.hpp"

namespace horoteich {
namespace {

IntMat2 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  IntMat2 m = IntMat2::identity();
  const IntMat2 gens[4] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}};
  for (int k = 0; k < 6; ++k) m = m * gens[pick(rng)];
  return m;
}

TEST(Rational, StaysInLowestTerms) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(numerator_of(r), -3);
  EXPECT_EQ(denominator_of(r), 2);
  const Rational s = r * make_rational(4, 9) + make_rational(2, 3);
  EXPECT_EQ(s, 0);
  EXPECT_EQ(denominator_of(s), 1);
}

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("0.1"), make_rational(1, 10));
  EXPECT_EQ(parse_rational("-2.5e-1"), make_rational(-1, 4));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(parse_rational("0.8"), make_rational(4, 5));
  EXPECT_EQ(parse_rational("0.10"), make_rational(1, 10));
  EXPECT_EQ(parse_rational("010/04"), make_rational(5, 2));
  EXPECT_EQ(parse_rational("-0.095"), make_rational(-19, 200));
  EXPECT_THROW(parse_rational("1/x"), InvalidInput);
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
  EXPECT_EQ(to_string(make_rational(-3, 12)), "-1/4");
}

TEST(Rational, BezoutAndFloorDiv) {
  for (std::int64_t a = -12; a <= 12; ++a) {
    for (std::int64_t b = -12; b <= 12; ++b) {
      const Bezout bz = bezout(a, b);
      EXPECT_EQ(bz.g, gcd64(a, b));
      EXPECT_EQ(a * bz.x + b * bz.y, bz.g);
      if (b != 0) {
        const std::int64_t q = floor_div(a, b);
        EXPECT_EQ(q, static_cast<std::int64_t>(std::floor(static_cast<double>(a) / b)));
      }
    }
  }
}

TEST(Mat2, InverseAndProducts) {
  const IntMat2 m{2, 1, 1, 1};
  EXPECT_EQ(m * m.inverse(), IntMat2::identity());
  EXPECT_TRUE(is_unimodular(m));
  EXPECT_THROW((IntMat2{2, 0, 0, 1}).inverse(), InvalidInput);
  const Mat2<Rational> r{make_rational(1, 2), 0, 0, 2};
  EXPECT_EQ(r * r.inverse(), Mat2<Rational>::identity());
  const auto g = geodesic_matrix(0.3) * geodesic_matrix(-0.3);
  EXPECT_NEAR(g.a, 1.0, 1e-15);
  EXPECT_NEAR(g.d, 1.0, 1e-15);
  const auto h = horocycle_matrix(2.0) * horocycle_matrix(3.0);
  EXPECT_EQ(h, horocycle_matrix(5.0));
  const Vec2<double> hol = horocycle_matrix(10.0) * Vec2<double>{2.0, 0.0};
  EXPECT_EQ(hol.x, 2.0);
  EXPECT_EQ(hol.y, 20.0);
}

TEST(Mobius, Examples) {
  const UpperHalfPoint i(0.0, 1.0);
  EXPECT_EQ(mobius_apply(IntMat2::identity(), i), i);
  const UpperHalfPoint t = mobius_apply(IntMat2{1, 1, 0, 1}, i);
  EXPECT_DOUBLE_EQ(t.x(), 1.0);
  EXPECT_DOUBLE_EQ(t.y(), 1.0);
  const UpperHalfPoint s = mobius_apply(IntMat2{0, -1, 1, 0}, UpperHalfPoint(0.0, 2.0));
  EXPECT_NEAR(s.x(), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.y(), 0.5);
}

TEST(Mobius, RejectsNonPositiveDeterminant) {
  EXPECT_THROW(mobius_apply(IntMat2{0, 1, 1, 0}, UpperHalfPoint(0.0, 1.0)), InvalidInput);
  EXPECT_THROW(UpperHalfPoint(0.0, 0.0), InvalidInput);
  EXPECT_THROW(UpperHalfPoint(0.0, -1.0), InvalidInput);
}

TEST(Mobius, IsALeftGroupAction) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.25, 4.0);
  for (int k = 0; k < 1000; ++k) {
    const IntMat2 m1 = random_unimodular(rng), m2 = random_unimodular(rng);
    const UpperHalfPoint z(re(rng), im(rng));
    const UpperHalfPoint lhs = mobius_apply(m1 * m2, z);
    const UpperHalfPoint rhs = mobius_apply(m1, mobius_apply(m2, z));
    const double scale = 1.0 + std::abs(lhs.x()) + lhs.y();
    ASSERT_NEAR(lhs.x(), rhs.x(), 1e-12 * scale);
    ASSERT_NEAR(lhs.y(), rhs.y(), 1e-12 * scale);
  }
}

TEST(HyperbolicDistance, Examples) {
  const UpperHalfPoint i(0.0, 1.0);
  EXPECT_EQ(hyperbolic_distance(i, i), 0.0);
  EXPECT_NEAR(hyperbolic_distance(i, UpperHalfPoint(0.0, 2.0)), std::log(2.0), 1e-15);
  EXPECT_NEAR(hyperbolic_distance(i, UpperHalfPoint(1.0, 1.0)), std::acosh(1.5), 1e-15);
}

TEST(HyperbolicDistance, MatchesArccoshFormAndIsInvariant) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.25, 4.0);
  for (int k = 0; k < 200; ++k) {
    const UpperHalfPoint a(re(rng), im(rng)), b(re(rng), im(rng));
    const double dx = a.x() - b.x(), dy = a.y() - b.y();
    const double ref = std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * a.y() * b.y()));
    EXPECT_NEAR(hyperbolic_distance(a, b), ref, 1e-12);
    const IntMat2 m = random_unimodular(rng);
    EXPECT_NEAR(hyperbolic_distance(mobius_apply(m, a), mobius_apply(m, b)), ref, 1e-9 * (1.0 + ref));
  }
}

TEST(HyperbolicDistance, TriangleInequality) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.1, 5.0);
  for (int k = 0; k < 1000; ++k) {
    const UpperHalfPoint a(re(rng), im(rng)), b(re(rng), im(rng)), c(re(rng), im(rng));
    ASSERT_LE(hyperbolic_distance(a, c), hyperbolic_distance(a, b) + hyperbolic_distance(b, c) + 1e-12);
  }
}

TEST(ParseComplex, Formats) {
  EXPECT_EQ(parse_upper_half_point("0+2i"), UpperHalfPoint(0.0, 2.0));
  EXPECT_EQ(parse_upper_half_point("-1.5+0.25i"), UpperHalfPoint(-1.5, 0.25));
  EXPECT_EQ(parse_upper_half_point("i"), UpperHalfPoint(0.0, 1.0));
  EXPECT_EQ(parse_upper_half_point("3i"), UpperHalfPoint(0.0, 3.0));
  EXPECT_EQ(parse_upper_half_point("1e-1+1e+1i"), UpperHalfPoint(0.1, 10.0));
  EXPECT_THROW(parse_upper_half_point("1-2i"), InvalidInput);
  EXPECT_THROW(parse_upper_half_point("1+2"), InvalidInput);
  EXPECT_THROW(parse_upper_half_point("x+yi"), InvalidInput);
}

TEST(Bracket, CompositionIsInclusionMonotone) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> val(0.01, 10.0), wid(0.0, 0.5);
  for (int k = 0; k < 1000; ++k) {
    const double x = val(rng), y = val(rng);
    const Bracket bx(x - wid(rng) * x, x + wid(rng)), by(y - wid(rng) * y, y + wid(rng));
    ASSERT_TRUE((bx + by).contains(x + y));
    ASSERT_TRUE((bx - by).contains(x - y));
    ASSERT_TRUE((bx * by).contains(x * y));
    ASSERT_TRUE((bx / by).contains(x / y));
    ASSERT_TRUE(log(bx).contains(std::log(x)));
    ASSERT_TRUE(sqrt(bx * by).contains(std::sqrt(x * y)));
    ASSERT_TRUE(log(bx * by).contains(std::log(x * y)));
  }
}

TEST(Bracket, RoundsOutward) {
  const Bracket third = Bracket::exact(1.0) / Bracket::exact(3.0);
  EXPECT_LT(third.lo(), 1.0 / 3.0);
  EXPECT_GT(third.hi(), 1.0 / 3.0);
  EXPECT_THROW(Bracket(2.0, 1.0), InvalidInput);
  EXPECT_FALSE(Bracket::at_least(1.0).bounded());
  EXPECT_TRUE(Bracket(1.0, 2.0).certainly_below(2.5));
  EXPECT_FALSE(Bracket(1.0, 2.0).certainly_below(1.5));
  EXPECT_FALSE(Bracket(1.0, 2.0).certainly_above(1.5));
}

TEST(Parallel, VisitsEveryIndexOnceAndPropagatesErrors) {
  setenv("HOROTEICH_THREADS", "3", 1);
  EXPECT_EQ(thread_budget(), 3u);
  std::vector<std::atomic<int>> hits(100);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                 if (i == 5) throw InvalidInput("boom");
               }),
               InvalidInput);
  unsetenv("HOROTEICH_THREADS");
}

}  // namespace
}  // namespace horoteich
