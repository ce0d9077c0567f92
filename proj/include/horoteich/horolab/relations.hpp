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
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horoteich/horolab/backend.hpp"
#include "horoteich/kernel.hpp"

namespace horoteich::horolab {

/// Default horocycle parameters for sampling a horosphere: 0 and +-2^k, k <= 20.
inline std::vector<double> default_horocycle_samples(int max_k = 20) {
  std::vector<double> out{0.0};
  for (int k = 0; k <= max_k; ++k) {
    out.push_back(std::ldexp(1.0, k));
    out.push_back(-std::ldexp(1.0, k));
  }
  return out;
}

/// Bounds for sup { Ext_X(g) : X in HS(f, level) }.
struct SupBound {
  std::optional<Rational> upper;  // certified; nullopt when unbounded or unknown
  double lower = 0.0;             // certified by sampled points
  bool exact = false;             // g is a multiple of f: sup = upper exactly
  bool precedes = false;          // g precedes f
};

/// For g = c f the sup is c^2 level. For g = a F_i it is at most a^2 level
/// (Ext(F_i) <= Ext(f)); otherwise at most (sum a_i^2) k level by
/// Cauchy-Schwarz over the k components. Without g preceding f it is infinite.
template <GeometryBackend B>
SupBound sup_on_horosphere(const B& b, const typename B::Foliation& f, const Rational& level,
                           const typename B::Foliation& g, const std::vector<double>& samples = {}) {
  SupBound out;
  const auto a = b.sub_coefficients(g, f);
  if (a) {
    out.precedes = true;
    const std::size_t k = a->size();
    std::size_t nonzero = 0;
    Rational sum_sq(0);
    bool equal = true;
    for (const auto& ai : *a) {
      if (ai != 0) ++nonzero;
      sum_sq += ai * ai;
      if (ai != a->front()) equal = false;
    }
    if (equal && a->front() != 0) {
      out.upper = a->front() * a->front() * level;
      out.exact = true;
      out.lower = to_double(*out.upper);
      return out;
    }
    out.upper = nonzero == 1 ? sum_sq * level : sum_sq * Rational(static_cast<std::int64_t>(k)) * level;
  }
  for (double s : samples) {
    if (auto x = b.horosphere_point(f, level, s)) out.lower = std::max(out.lower, b.ext(*x, g).lo());
  }
  return out;
}

enum class RelationTag { DisjointBalls, Tangent, Overlapping, NestedForward, NestedBackward, Undecided };

inline const char* tag_name(RelationTag t) {
  switch (t) {
    case RelationTag::DisjointBalls:
      return "DisjointBalls";
    case RelationTag::Tangent:
      return "Tangent";
    case RelationTag::Overlapping:
      return "Overlapping";
    case RelationTag::NestedForward:
      return "NestedForward";
    case RelationTag::NestedBackward:
      return "NestedBackward";
    default:
      return "Undecided";
  }
}

struct HoroRelation {
  RelationTag tag = RelationTag::Undecided;
  Rational intersection;
  std::optional<Bracket> bracket;  // sup bound behind an undecided nesting
  std::string reason;
};

/// Relation of HB(h1) and HB(h2). NestedForward: HB(h2) inside HB(h1)
/// (h1's foliation precedes h2's); NestedBackward: the mirror.
template <GeometryBackend B>
HoroRelation classify(const HoroSpec<typename B::Foliation>& h1, const HoroSpec<typename B::Foliation>& h2,
                      const B& b, const std::vector<double>& samples = default_horocycle_samples()) {
  HoroRelation out;
  out.intersection = b.intersect(h1.foliation, h2.foliation);
  if (out.intersection > 0) {
    const Rational prod = h1.level * h2.level, i2 = out.intersection * out.intersection;
    if (prod == i2) {
      out.tag = RelationTag::Tangent;
      out.reason = "level product equals i^2";
    } else if (prod < i2) {
      out.tag = RelationTag::DisjointBalls;
      out.reason = "level product below i^2 (Minsky)";
    } else {
      out.tag = RelationTag::Overlapping;
      out.reason = "level product above i^2";
    }
    return out;
  }
  // i = 0: nesting in a direction needs the inner foliation to precede the outer.
  const SupBound fwd = sup_on_horosphere(b, h2.foliation, h2.level, h1.foliation, samples);
  if (fwd.precedes && *fwd.upper <= h1.level) {
    out.tag = RelationTag::NestedForward;
    out.reason = "sup of Ext(f1) on HS(f2) at most level1";
    return out;
  }
  const SupBound bwd = sup_on_horosphere(b, h1.foliation, h1.level, h2.foliation, samples);
  if (bwd.precedes && *bwd.upper <= h2.level) {
    out.tag = RelationTag::NestedBackward;
    out.reason = "sup of Ext(f2) on HS(f1) at most level2";
    return out;
  }
  if (!fwd.precedes && !bwd.precedes) {
    out.reason = "disjoint foliations, neither precedes the other";
    return out;
  }
  // Some F precedes: deep inside HB(F) both extremal lengths are small, so the
  // balls meet; a sampled point beyond the level refutes the nesting.
  const bool fwd_refuted = !fwd.precedes || fwd.lower > to_double(h1.level);
  const bool bwd_refuted = !bwd.precedes || bwd.lower > to_double(h2.level);
  if (fwd_refuted && bwd_refuted) {
    out.tag = RelationTag::Overlapping;
    out.reason = "balls meet and a sampled point refutes nesting";
    return out;
  }
  const SupBound& open = fwd_refuted ? bwd : fwd;
  out.bracket = Bracket(open.lower, to_double(*open.upper));
  out.reason = "sup bound straddles the level";
  return out;
}

enum class ProbeOutcome { IncludedCertified, ExcludedWitness, Inconclusive };

inline const char* outcome_name(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::IncludedCertified:
      return "IncludedCertified";
    case ProbeOutcome::ExcludedWitness:
      return "ExcludedWitness";
    default:
      return "Inconclusive";
  }
}

template <class P>
struct ProbeResult {
  ProbeOutcome outcome = ProbeOutcome::Inconclusive;
  std::optional<P> witness;
  double witness_parameter = 0.0;
  Bracket witness_ext{0.0, 0.0};
  std::optional<Rational> sup_bound;
  std::size_t samples = 0;
};

/// Whether HB(h1) lies inside HB(h2): certified by a finite sup bound at most
/// level2, refuted by a point of HS(h1) where Ext(f2) exceeds level2.
template <GeometryBackend B>
ProbeResult<typename B::Point> inclusion_probe(const HoroSpec<typename B::Foliation>& h1,
                                               const HoroSpec<typename B::Foliation>& h2, const B& b,
                                               const std::vector<double>& samples = default_horocycle_samples()) {
  ProbeResult<typename B::Point> out;
  const SupBound sup = sup_on_horosphere(b, h1.foliation, h1.level, h2.foliation);
  out.sup_bound = sup.upper;
  if (sup.upper && *sup.upper <= h2.level) {
    out.outcome = ProbeOutcome::IncludedCertified;
    return out;
  }
  const double level2 = to_double(h2.level);
  for (double s : samples) {
    const auto x = b.horosphere_point(h1.foliation, h1.level, s);
    if (!x) continue;
    ++out.samples;
    const Bracket e = b.ext(*x, h2.foliation);
    if (e.lo() > level2) {
      out.outcome = ProbeOutcome::ExcludedWitness;
      out.witness = *x;
      out.witness_parameter = s;
      out.witness_ext = e;
      return out;
    }
  }
  return out;
}

struct BusemannEstimate {
  double value = 0.0;
  bool certified = false;
  std::vector<std::pair<double, Bracket>> sequence;  // (t_k, D(t_k))
  std::string trace;                                 // why certification failed
};

/// lim D(t), D(t) = d(x, G(t)) - t, at t = 2^k until successive values differ
/// by less than tol. Certified when D never increased beyond the bracket
/// widths and stayed above -d(G(0), x).
template <DistanceBackend B>
BusemannEstimate busemann_estimate(const typename B::Point& x0, const typename B::Foliation& f,
                                   const typename B::Point& x, const B& b, double tol, int max_doublings = 40) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  BusemannEstimate out;
  out.certified = true;
  const Bracket d0 = b.distance(x0, x);
  for (int k = 0; k <= max_doublings; ++k) {
    const double t = std::ldexp(1.0, k);
    const Bracket d = b.ray_excess(x0, f, x, t);
    const double slack = 1e-12 * (1.0 + t);
    if (d.hi() < -d0.hi() - slack) {
      out.certified = false;
      out.trace += "D(" + std::to_string(t) + ") below -d(x0, x); ";
    }
    if (!out.sequence.empty()) {
      const Bracket& prev = out.sequence.back().second;
      if (d.lo() > prev.hi() + slack) {
        out.certified = false;
        out.trace += "D increased at t = " + std::to_string(t) + "; ";
      }
      out.sequence.emplace_back(t, d);
      if (std::abs(0.5 * (d.lo() + d.hi()) - 0.5 * (prev.lo() + prev.hi())) < tol) {
        out.value = 0.5 * (d.lo() + d.hi());
        return out;
      }
    } else {
      out.sequence.emplace_back(t, d);
    }
  }
  out.certified = false;
  out.value = 0.5 * (out.sequence.back().second.lo() + out.sequence.back().second.hi());
  out.trace += "did not settle within the doubling budget";
  return out;
}

}  // namespace horoteich::horolab
