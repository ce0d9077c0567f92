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
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "horoteich/kernel.hpp"
#include "horoteich/origami/cylinders.hpp"
#include "horoteich/origami/marked.hpp"
#include "horoteich/origami/origami.hpp"
#include "horoteich/origami/remark.hpp"
#include "horoteich/origami/trace.hpp"

namespace horoteich::origami {

namespace detail {

template <class T>
T scalar(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return static_cast<T>(to_double(r));
  }
}

template <class T>
T abs_value(const T& v) {
  if (v < T(0)) return T(-v);
  return v;
}

}  // namespace detail

struct WeightedCylinder {
  Rational weight;
  CylinderCurve curve;
};

/// Weighted disjoint parallel cylinder cores on one origami.
class MulticurveFoliation {
 public:
  MulticurveFoliation(const Origami& o, std::vector<WeightedCylinder> components)
      : surface_(o), components_(std::move(components)) {
    if (components_.empty()) throw InvalidInput("foliation needs at least one component");
    for (const auto& c : components_) {
      if (!(c.weight > 0)) throw InvalidInput("component weights must be positive");
      if (c.curve.axis != components_.front().curve.axis) {
        throw InvalidInput("foliation components must share a direction");
      }
    }
    for (std::size_t i = 0; i < components_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (components_[i].curve == components_[j].curve) throw InvalidInput("foliation repeats a component");
      }
    }
    for (const auto& c : components_) cores_.push_back(cylinder_core(o, c.curve));
  }

  const Origami& surface() const { return surface_; }
  const std::vector<WeightedCylinder>& components() const { return components_; }
  const std::vector<CurveTrace>& cores() const { return cores_; }
  Axis axis() const { return components_.front().curve.axis; }
  bool indecomposable() const { return components_.size() == 1; }

  MulticurveFoliation scaled(const Rational& k) const {
    if (!(k > 0)) throw InvalidInput("scale factor must be positive");
    auto comps = components_;
    for (auto& c : comps) c.weight *= k;
    return MulticurveFoliation(surface_, std::move(comps));
  }
  /// Single component j with its weight.
  MulticurveFoliation component(std::size_t j) const { return MulticurveFoliation(surface_, {components_.at(j)}); }

 private:
  Origami surface_;
  std::vector<WeightedCylinder> components_;
  std::vector<CurveTrace> cores_;
};

/// Cylinders of one direction weighted by their widths: the measured
/// foliation |dx| (vertical) or |dy| (horizontal) of the base surface.
inline MulticurveFoliation canonical_foliation(const Origami& o, Axis axis) {
  std::vector<WeightedCylinder> comps;
  for (auto& c : cylinders(o, axis)) comps.push_back({Rational(c.height), std::move(c)});
  return MulticurveFoliation(o, std::move(comps));
}
inline MulticurveFoliation vertical_foliation(const Origami& o) { return canonical_foliation(o, Axis::Vertical); }
inline MulticurveFoliation horizontal_foliation(const Origami& o) { return canonical_foliation(o, Axis::Horizontal); }

/// i(F, gamma) = sum_j w_j i(core_j, gamma), exact.
inline Rational intersection(const MulticurveFoliation& f, const CurveTrace& t) {
  Rational sum(0);
  for (std::size_t j = 0; j < f.components().size(); ++j) {
    sum += f.components()[j].weight * Rational(crossing_number(f.cores()[j], t));
  }
  return sum;
}

inline Rational intersection(const MulticurveFoliation& f, const MulticurveFoliation& g) {
  Rational sum(0);
  for (std::size_t i = 0; i < f.components().size(); ++i) {
    for (std::size_t j = 0; j < g.components().size(); ++j) {
      sum += f.components()[i].weight * g.components()[j].weight *
             Rational(crossing_number(f.cores()[i], g.cores()[j]));
    }
  }
  return sum;
}

/// Transverse measure of the vertical (|dx|) or horizontal (|dy|) foliation of
/// the deformed surface along a closed straight trace: |component of A hol|.
template <class T>
T i_with_foliation(const CurveTrace& t, Axis axis, const MarkedFlatSurface<T>& x) {
  const Vec2<T> h = x.develop(t.holonomy());
  return detail::abs_value(axis == Axis::Vertical ? h.x : h.y);
}

template <class T>
struct ExtBracket {
  T lo;
  T hi;
  /// Enclosure widened outward for rounding (exact for Rational).
  Bracket certified() const {
    if constexpr (std::is_same_v<T, Rational>) {
      return Bracket(std::nextafter(to_double(lo), 0.0), std::nextafter(to_double(hi), std::numeric_limits<double>::infinity()));
    } else {
      constexpr double kRel = 8 * std::numeric_limits<double>::epsilon();
      return Bracket(lo * (1.0 - kRel), hi * (1.0 + kRel));
    }
  }
};

/// Ext of a closed trace on x: the flat metric gives lo = |A hol|^2 / area;
/// the embedded maximal cylinder gives hi = |A hol|^2 / (det A * cylinder area),
/// its deformed circumference over deformed height.
template <class T>
ExtBracket<T> ext_bracket(const CurveTrace& t, const MarkedFlatSurface<T>& x, const TraceCylinder& cyl) {
  if (!(t.surface() == x.base())) throw InvalidInput("trace does not live on the marked surface's origami");
  const Vec2<T> h = x.develop(t.holonomy());
  const T len2 = dot(h, h);
  return {len2 / x.area(), len2 / (x.deform().det() * T(cyl.area))};
}

template <class T>
ExtBracket<T> ext_bracket(const CurveTrace& t, const MarkedFlatSurface<T>& x) {
  return ext_bracket(t, x, enclosing_cylinder(t));
}

/// Ext of a weighted multicurve: lo from the flat metric, (sum w_j |A hol_j|)^2 / area;
/// hi from disjoint embedded cylinders, sum w_j^2 hi_j.
template <class T>
ExtBracket<T> ext_bracket(const MulticurveFoliation& f, const MarkedFlatSurface<T>& x) {
  if (!(f.surface() == x.base())) throw InvalidInput("foliation does not live on the marked surface's origami");
  T len(0), hi(0);
  for (std::size_t j = 0; j < f.components().size(); ++j) {
    const T w = detail::scalar<T>(f.components()[j].weight);
    const Vec2<T> h = x.develop(f.cores()[j].holonomy());
    const T len2 = dot(h, h);
    if constexpr (std::is_same_v<T, Rational>) {
      // |A hol| is irrational in general; only the upper bound stays exact.
      len += w * T(std::sqrt(to_double(len2)));
    } else {
      len += w * std::sqrt(len2);
    }
    hi += w * w * len2 / (x.deform().det() * T(f.components()[j].curve.area()));
  }
  return {len * len / x.area(), hi};
}

struct GrowthSample {
  double s = 0.0;
  double lo = 0.0;
  double linear_bound = 0.0;                // (|s| i_v - i_h)^2 / area, or 0
  std::optional<double> quadratic_bound;    // s^2 i_v^2 / (2 area), beyond the threshold
  bool ok = true;
};

struct GrowthReport {
  double i_v = 0.0;
  double i_h = 0.0;
  double area = 0.0;
  double threshold = 0.0;  // |s| from which the quadratic bound applies
  std::vector<GrowthSample> samples;
  std::vector<double> violations;  // s values where a bound failed
  std::array<double, 3> fit{};     // lo ~ fit[0] + fit[1] s + fit[2] s^2
  double fit_residual = 0.0;       // ||residual|| / ||lo||
  bool ok = true;
};

namespace detail {

/// Least squares for columns (1, s, s^2) by modified Gram-Schmidt on scaled
/// columns.
inline std::pair<std::array<double, 3>, double> quadratic_fit(const std::vector<double>& s,
                                                              const std::vector<double>& y) {
  const std::size_t m = s.size();
  std::array<double, 3> coef{0.0, 0.0, 0.0};
  if (m < 3) return {coef, 0.0};
  double smax = 0.0;
  for (double v : s) smax = std::max(smax, std::abs(v));
  if (smax == 0.0) smax = 1.0;
  std::array<std::vector<double>, 3> q;
  for (int j = 0; j < 3; ++j) {
    q[j].resize(m);
    for (std::size_t i = 0; i < m; ++i) q[j][i] = std::pow(s[i] / smax, j);
  }
  std::array<std::array<double, 3>, 3> r{};
  for (int j = 0; j < 3; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        double dotp = 0.0;
        for (std::size_t i = 0; i < m; ++i) dotp += q[k][i] * q[j][i];
        r[k][j] += dotp;
        for (std::size_t i = 0; i < m; ++i) q[j][i] -= dotp * q[k][i];
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < m; ++i) nrm += q[j][i] * q[j][i];
    nrm = std::sqrt(nrm);
    r[j][j] = nrm;
    if (nrm > 0.0) {
      for (std::size_t i = 0; i < m; ++i) q[j][i] /= nrm;
    }
  }
  std::array<double, 3> qty{};
  std::vector<double> resid = y;
  for (int j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < m; ++i) qty[j] += q[j][i] * resid[i];
    for (std::size_t i = 0; i < m; ++i) resid[i] -= qty[j] * q[j][i];
  }
  for (int j = 2; j >= 0; --j) {
    double v = qty[j];
    for (int k = j + 1; k < 3; ++k) v -= r[j][k] * coef[k];
    coef[j] = r[j][j] > 0.0 ? v / r[j][j] : 0.0;
  }
  for (int j = 0; j < 3; ++j) coef[j] /= std::pow(smax, j);
  double rn = 0.0, yn = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    rn += resid[i] * resid[i];
    yn += y[i] * y[i];
  }
  return {coef, yn > 0.0 ? std::sqrt(rn / yn) : 0.0};
}

}  // namespace detail

/// Lower bounds for Ext along the horocycle orbit h^s x: the flat length
/// satisfies int |s dx + dy| >= |s| i_v - i_h, so lo >= (|s| i_v - i_h)^2 / area,
/// and lo >= s^2 i_v^2 / (2 area) once |s| >= i_h / (i_v (1 - 1/sqrt 2)).
inline GrowthReport horocycle_growth_check(const CurveTrace& t, const MarkedFlatSurface<double>& x,
                                           const std::vector<double>& s_values) {
  GrowthReport rep;
  rep.i_v = i_with_foliation(t, Axis::Vertical, x);
  rep.i_h = i_with_foliation(t, Axis::Horizontal, x);
  rep.area = x.area();
  if (!(rep.i_v > 0.0)) throw InvalidInput("growth check needs i(trace, vertical foliation) > 0");
  rep.threshold = rep.i_h / (rep.i_v * (1.0 - 1.0 / std::sqrt(2.0)));
  const TraceCylinder cyl = enclosing_cylinder(t);
  constexpr double kRel = 1e-12;
  std::vector<double> ss, los;
  for (double s : s_values) {
    GrowthSample g;
    g.s = s;
    g.lo = ext_bracket(t, horocycle_flow(x, s), cyl).lo;
    const double base = std::abs(s) * rep.i_v - rep.i_h;
    g.linear_bound = base > 0.0 ? base * base / rep.area : 0.0;
    if (g.lo < g.linear_bound * (1.0 - kRel)) g.ok = false;
    if (std::abs(s) >= rep.threshold && s != 0.0) {
      g.quadratic_bound = s * s * rep.i_v * rep.i_v / (2.0 * rep.area);
      if (g.lo < *g.quadratic_bound * (1.0 - kRel)) g.ok = false;
    }
    if (!g.ok) rep.violations.push_back(s);
    rep.ok = rep.ok && g.ok;
    ss.push_back(s);
    los.push_back(g.lo);
    rep.samples.push_back(g);
  }
  std::tie(rep.fit, rep.fit_residual) = detail::quadratic_fit(ss, los);
  return rep;
}

/// Teichmuller distance between two markings of one origami: above by the
/// dilatation of the affine map B A^-1, below by Kerckhoff's ratio with
/// bracketed extremal lengths of test curves.
inline Bracket distance_bracket(const MarkedFlatSurface<double>& x, const MarkedFlatSurface<double>& y,
                                const std::vector<CurveTrace>& extra_curves = {}) {
  if (!(x.base() == y.base())) throw InvalidInput("distance needs markings of the same origami");
  const Mat2<double> m = y.deform() * x.deform().inverse();
  const double det = m.det();
  const double fro = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
  const double disc = std::max(0.0, fro * fro - 4.0 * det * det);
  const double upper = 0.5 * std::log((fro + std::sqrt(disc)) / (2.0 * det));
  std::vector<CurveTrace> curves = extra_curves;
  for (Axis a : {Axis::Horizontal, Axis::Vertical}) {
    for (const auto& c : cylinders(x.base(), a)) curves.push_back(cylinder_core(x.base(), c));
  }
  // The canonical foliations have exact extremal lengths at every marking.
  double lower = std::max(std::abs(0.5 * std::log(ext_vertical(y) / ext_vertical(x))),
                          std::abs(0.5 * std::log(ext_horizontal(y) / ext_horizontal(x))));
  for (const auto& c : curves) {
    const TraceCylinder cyl = enclosing_cylinder(c);
    const Bracket ex = ext_bracket(c, x, cyl).certified();
    const Bracket ey = ext_bracket(c, y, cyl).certified();
    lower = std::max({lower, 0.5 * std::log(ey.lo() / ex.hi()), 0.5 * std::log(ex.lo() / ey.hi())});
  }
  const double slack = 1e-14 * (1.0 + upper);
  return Bracket(std::max(0.0, lower - slack), std::max(lower, upper) + slack);
}

struct BusemannRaySample {
  double t = 0.0;
  double closed_form = 0.0;  // 1/2 log(Ext(g_t x) / Ext(x)) of the vertical foliation
  Bracket definition{0.0, 0.0};  // d(g_t x, G(T)) - T for a far time T
  bool agree = false;
};

struct BusemannRayReport {
  std::vector<BusemannRaySample> samples;
  bool all_agree = true;
};

/// Along the ray G(t) = g_t x of an indecomposable vertical foliation the
/// Busemann function equals -t: both from the extremal-length closed form and
/// from the definition d(G(t), G(T)) - T.
inline BusemannRayReport busemann_ray_check(const Origami& o, const std::vector<double>& t_values) {
  const auto vert = cylinders(o, Axis::Vertical);
  if (vert.size() != 1) {
    throw InvalidInput("Busemann ray check needs one vertical cylinder (found " + std::to_string(vert.size()) +
                       "); the foliation is decomposable");
  }
  const MarkedFlatSurface<double> x0(o);
  double far = 1.0;
  for (double t : t_values) far = std::max(far, std::abs(t) + 1.0);
  const MarkedFlatSurface<double> g_far = geodesic_flow(x0, far);
  const double e0 = ext_vertical(x0);
  BusemannRayReport rep;
  for (double t : t_values) {
    BusemannRaySample s;
    s.t = t;
    const MarkedFlatSurface<double> xt = geodesic_flow(x0, t);
    s.closed_form = 0.5 * std::log(ext_vertical(xt) / e0);
    const Bracket d = distance_bracket(xt, g_far);
    s.definition = Bracket(d.lo() - far, d.hi() - far);
    const double slack = 1e-12 * (1.0 + std::abs(t));
    s.agree = std::abs(s.closed_form + t) <= slack && s.definition.lo() - slack <= s.closed_form &&
              s.closed_form <= s.definition.hi() + slack;
    rep.all_agree = rep.all_agree && s.agree;
    rep.samples.push_back(s);
  }
  return rep;
}

/// E_F(gamma) = sum_j (w_j i(core_j, gamma))^2 / (w_j i(core_j, G)) with G the
/// horizontal foliation of x and i(core_j, G) its |dy| measure along core_j.
template <class T>
T walsh_E(const MulticurveFoliation& f, const CurveTrace& gamma, const MarkedFlatSurface<T>& x) {
  if (f.axis() != Axis::Vertical) throw InvalidInput("walsh_E expects a vertical multicurve foliation");
  if (!(f.surface() == x.base()) || !(gamma.surface() == x.base())) {
    throw InvalidInput("foliation, curve and marking must share the origami");
  }
  T sum(0);
  for (std::size_t j = 0; j < f.components().size(); ++j) {
    const T w = detail::scalar<T>(f.components()[j].weight);
    const T ig = T(crossing_number(f.cores()[j], gamma));
    const T iG = i_with_foliation(f.cores()[j], Axis::Horizontal, x);
    if (iG == T(0)) throw InvalidInput("horizontal foliation is not transverse to component " + std::to_string(j));
    sum += (w * ig) * (w * ig) / (w * iG);
  }
  return sum;
}

struct SmallIntersectionResult {
  CurveTrace witness;
  std::vector<Rational> intersections;  // i(F_j, witness)
  Rational ratio;                       // max_{j > 0} i(F_j, .) / i(F_0, .), 0 if k = 0
  std::size_t examined = 0;
};

/// Curve beta with i(F_j, beta) < eps i(F_0, beta) for all j > 0. Candidates
/// are closed geodesics through the squares, by increasing direction height
/// max(|dx|, |dy|), directions steepest along F_0 first; each ratio is exact.
inline SmallIntersectionResult small_intersection_search(const std::vector<MulticurveFoliation>& components,
                                                         const Rational& eps, std::size_t budget = 100000) {
  if (components.empty()) throw InvalidInput("search needs at least the component F_0");
  if (!(eps > 0)) throw InvalidInput("epsilon must be positive (the inequality is strict)");
  const Origami& o = components.front().surface();
  for (const auto& f : components) {
    if (!(f.surface() == o)) throw InvalidInput("components must live on one origami");
    if (!f.indecomposable()) throw InvalidInput("each component must be indecomposable (one cylinder)");
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (components[i].components()[0].curve == components[j].components()[0].curve) {
        throw InvalidInput("components must be projectively distinct");
      }
      if (intersection(components[i], components[j]) != 0) throw InvalidInput("components must be pairwise disjoint");
    }
  }
  const bool f0_vertical = components.front().axis() == Axis::Vertical;
  std::optional<Rational> best;
  std::size_t examined = 0;
  for (std::int64_t height = 1;; ++height) {
    // Directions of height `height`, ordered from parallel to F_0 toward transverse.
    std::vector<IntVec> dirs;
    for (std::int64_t lateral = 0; lateral <= height; ++lateral) {
      for (std::int64_t sign : {1, -1}) {
        if (lateral == 0 && sign < 0) continue;
        const IntVec d = f0_vertical ? IntVec{lateral, sign * height} : IntVec{height, sign * lateral};
        if (gcd64(d.x, d.y) != 1) continue;
        dirs.push_back(normalize_direction(d.x, d.y));
      }
      if (lateral == height) break;
    }
    for (std::int64_t lateral = height; lateral-- > 0;) {
      for (std::int64_t sign : {1, -1}) {
        const IntVec d = f0_vertical ? IntVec{height, sign * lateral} : IntVec{lateral, sign * height};
        if (gcd64(d.x, d.y) != 1 || (lateral == 0 && sign < 0)) continue;
        const IntVec nd = normalize_direction(d.x, d.y);
        if (std::find(dirs.begin(), dirs.end(), nd) == dirs.end()) dirs.push_back(nd);
      }
    }
    std::vector<CurveKey> seen;
    for (const IntVec& d : dirs) {
      for (int sq = 0; sq < o.n(); ++sq) {
        if (examined >= budget) {
          throw BudgetExhausted("small-intersection search budget exhausted; best ratio " +
                                    (best ? to_string(*best) : std::string("none")),
                                best ? to_double(*best) : std::numeric_limits<double>::infinity());
        }
        CurveTrace beta = [&] {
          try {
            return trace_from(o, sq, d);
          } catch (const SingularityHit&) {
            return CurveTrace();
          }
        }();
        if (beta.segments().empty()) continue;
        const CurveKey key = isotopy_key(beta);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        ++examined;
        std::vector<Rational> is;
        for (const auto& f : components) is.push_back(intersection(f, beta));
        if (is[0] == 0) continue;
        Rational worst(0);
        for (std::size_t j = 1; j < is.size(); ++j) worst = std::max(worst, Rational(is[j] / is[0]));
        if (!best || worst < *best) best = worst;
        if (worst < eps) return {std::move(beta), std::move(is), worst, examined};
      }
    }
  }
}

}  // namespace horoteich::origami
