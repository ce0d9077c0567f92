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
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "horoteich/curvegraph/curve_set.hpp"
#include "horoteich/curvegraph/graph.hpp"
#include "horoteich/kernel.hpp"
#include "horoteich/origami.hpp"
#include "horoteich/torus.hpp"

namespace horoteich::curvegraph {

/// Isotopy class of a payload: the primitive vector on the torus, the
/// (direction, cylinder) key on an origami.
using ClassKey = std::variant<torus::TorusCurve, origami::CurveKey>;

inline ClassKey class_key(const CurvePayload& p) {
  if (const auto* c = std::get_if<torus::TorusCurve>(&p)) return *c;
  return origami::isotopy_key(std::get<origami::CurveTrace>(p));
}

/// Image of a curve under the mapping class with derivative m. On an origami
/// m must lie in the Veech group.
inline CurvePayload image_payload(const IntMat2& m, const CurvePayload& p) {
  if (!is_unimodular(m)) throw InvalidInput("re-marking matrix must have determinant +-1");
  if (const auto* c = std::get_if<torus::TorusCurve>(&p)) {
    return torus::TorusCurve(m.a * c->p() + m.b * c->q(), m.c * c->p() + m.d * c->q());
  }
  return origami::apply_affine(m, std::get<origami::CurveTrace>(p));
}

/// sigma with m(curve u) isotopic to curve sigma[u]; InvalidInput when the set
/// is not closed under m.
inline std::vector<std::size_t> induced_permutation(const CurveSet& cs, const IntMat2& m) {
  std::map<ClassKey, std::size_t> index;
  for (std::size_t k = 0; k < cs.size(); ++k) index.emplace(class_key(cs.vertex(k).payload), k);
  std::vector<std::size_t> sigma(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const auto it = index.find(class_key(image_payload(m, cs.vertex(k).payload)));
    if (it == index.end()) {
      throw InvalidInput("curve set is not closed under the re-marking: image of '" + cs.vertex(k).id + "' is missing");
    }
    sigma[k] = it->second;
  }
  return sigma;
}

/// Smallest set containing the seeds and closed under m (m of finite order
/// modulo isotopy on the seeds). BudgetExhausted past cap curves.
inline std::vector<CurvePayload> closure_under(const std::vector<CurvePayload>& seeds, const IntMat2& m,
                                               std::size_t cap = 1000) {
  std::vector<CurvePayload> out;
  std::map<ClassKey, std::size_t> seen;
  for (const auto& s : seeds) {
    CurvePayload cur = s;
    while (seen.emplace(class_key(cur), out.size()).second) {
      out.push_back(cur);
      if (out.size() > cap) throw BudgetExhausted("closure exceeds " + std::to_string(cap) + " curves", static_cast<double>(cap));
      cur = image_payload(m, cur);
    }
  }
  return out;
}

/// Distinct closed geodesic classes in direction d found by tracing from
/// several points on each square's start edge.
inline std::vector<origami::CurveTrace> direction_curves(const origami::Origami& o, origami::IntVec d) {
  d = origami::normalize_direction(d.x, d.y);
  std::vector<origami::CurveTrace> out;
  std::map<origami::CurveKey, bool> seen;
  const origami::Edge edge = d.x == 0 ? origami::Edge::Bottom : origami::Edge::Left;
  for (int sq = 0; sq < o.n(); ++sq) {
    for (const auto& off : {make_rational(1, 2), make_rational(1, 3), make_rational(2, 3), make_rational(1, 5),
                            make_rational(4, 5)}) {
      try {
        auto t = origami::trace_curve(o, {sq, edge, off}, d);
        if (seen.emplace(origami::isotopy_key(t), true).second) out.push_back(std::move(t));
      } catch (const origami::SingularityHit&) {
      }
    }
  }
  return out;
}

struct InvarianceReport {
  std::vector<std::size_t> sigma;
  bool automorphism = false;
  /// i(m u, m v) recomputed from the image curves equals i(sigma u, sigma v)
  /// and i(u, v) for every pair.
  bool i_matches = false;
  std::vector<std::vector<std::int64_t>> recomputed;
};

/// Checks that the action of m on a closed curve set is a graph automorphism
/// and preserves the intersection table.
inline InvarianceReport check_invariance(const CurveSet& cs, const IntMat2& m) {
  InvarianceReport out;
  out.sigma = induced_permutation(cs, m);
  out.automorphism = automorphism_check(build_graph(cs), out.sigma);
  std::vector<CurveVertex> images;
  for (const auto& v : cs.vertices()) images.push_back({v.id, image_payload(m, v.payload)});
  out.recomputed = CurveSet::compute_matrix(images);
  out.i_matches = true;
  for (std::size_t u = 0; u < cs.size(); ++u) {
    for (std::size_t v = 0; v < cs.size(); ++v) {
      if (out.recomputed[u][v] != cs.i(out.sigma[u], out.sigma[v]) || out.recomputed[u][v] != cs.i(u, v)) {
        out.i_matches = false;
      }
    }
  }
  return out;
}

}  // namespace horoteich::curvegraph
