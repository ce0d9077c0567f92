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
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "horoteich/kernel.hpp"
#include "horoteich/origami.hpp"
#include "horoteich/torus.hpp"

namespace horoteich::curvegraph {

using CurvePayload = std::variant<torus::TorusCurve, origami::CurveTrace>;

struct CurveVertex {
  std::string id;
  CurvePayload payload;
};

enum class SurfaceKind { Torus, Origami };

/// Exact geometric intersection number of two payloads of the same kind.
/// Flat geodesics in distinct directions are in minimal position, so the
/// crossing count of traces is the intersection number of their classes.
inline std::int64_t payload_intersection(const CurvePayload& a, const CurvePayload& b) {
  if (a.index() != b.index()) throw InvalidInput("torus curves and origami traces cannot be mixed");
  if (const auto* ta = std::get_if<torus::TorusCurve>(&a)) return torus::intersection(*ta, std::get<torus::TorusCurve>(b));
  return origami::crossing_number(std::get<origami::CurveTrace>(a), std::get<origami::CurveTrace>(b));
}

/// Finite set of pairwise non-isotopic simple closed curves on one surface
/// with their exact intersection table (symmetric, zero diagonal).
class CurveSet {
 public:
  explicit CurveSet(std::vector<CurveVertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidInput("a curve set needs at least one curve");
    kind_ = std::holds_alternative<torus::TorusCurve>(vertices_.front().payload) ? SurfaceKind::Torus
                                                                                  : SurfaceKind::Origami;
    std::set<std::string> ids;
    for (const auto& v : vertices_) {
      if (v.id.empty()) throw InvalidInput("curve identifiers must be non-empty");
      if (!ids.insert(v.id).second) throw InvalidInput("duplicate curve identifier '" + v.id + "'");
      if (v.payload.index() != vertices_.front().payload.index()) {
        throw InvalidInput("torus curves and origami traces cannot be mixed");
      }
    }
    if (kind_ == SurfaceKind::Origami) {
      const auto& o = std::get<origami::CurveTrace>(vertices_.front().payload).surface();
      surface_ = std::make_shared<const origami::Origami>(o);
      std::set<origami::CurveKey> keys;
      for (const auto& v : vertices_) {
        const auto& t = std::get<origami::CurveTrace>(v.payload);
        if (!(t.surface() == o)) throw InvalidInput("curve '" + v.id + "' lives on a different origami");
        if (!keys.insert(origami::isotopy_key(t)).second) {
          throw InvalidInput("curve '" + v.id + "' is isotopic to an earlier curve");
        }
      }
    } else {
      std::set<torus::TorusCurve> seen;
      for (const auto& v : vertices_) {
        if (!seen.insert(std::get<torus::TorusCurve>(v.payload)).second) {
          throw InvalidInput("curve '" + v.id + "' repeats an earlier torus class");
        }
      }
    }
    i_ = compute_matrix(vertices_);
  }

  /// Torus classes with ids c0, c1, ...
  static CurveSet from_torus(const std::vector<torus::TorusCurve>& curves) {
    std::vector<CurveVertex> v;
    for (std::size_t k = 0; k < curves.size(); ++k) v.push_back({"c" + std::to_string(k), curves[k]});
    return CurveSet(std::move(v));
  }

  /// Origami traces with ids c0, c1, ...
  static CurveSet from_traces(const std::vector<origami::CurveTrace>& traces) {
    std::vector<CurveVertex> v;
    for (std::size_t k = 0; k < traces.size(); ++k) v.push_back({"c" + std::to_string(k), traces[k]});
    return CurveSet(std::move(v));
  }

  std::size_t size() const { return vertices_.size(); }
  SurfaceKind kind() const { return kind_; }
  const std::vector<CurveVertex>& vertices() const { return vertices_; }
  const CurveVertex& vertex(std::size_t k) const { return vertices_.at(k); }
  const std::vector<std::vector<std::int64_t>>& i_matrix() const { return i_; }
  std::int64_t i(std::size_t u, std::size_t v) const { return i_.at(u).at(v); }
  /// Underlying origami; InvalidInput for torus sets.
  const origami::Origami& surface() const {
    if (!surface_) throw InvalidInput("torus curve sets have no origami");
    return *surface_;
  }

  /// Index of the vertex with this id, or size() if absent.
  std::size_t index_of(const std::string& id) const {
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (vertices_[k].id == id) return k;
    }
    return vertices_.size();
  }

  /// Recomputes every entry and compares with the stored table.
  bool verify() const { return compute_matrix(vertices_) == i_; }

  /// Intersection table of the payloads, filled in parallel over rows.
  static std::vector<std::vector<std::int64_t>> compute_matrix(const std::vector<CurveVertex>& vs) {
    const std::size_t n = vs.size();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    parallel_for(n, [&](std::size_t u) {
      for (std::size_t v = u + 1; v < n; ++v) m[u][v] = payload_intersection(vs[u].payload, vs[v].payload);
    });
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < u; ++v) m[u][v] = m[v][u];
    }
    return m;
  }

 private:
  std::vector<CurveVertex> vertices_;
  SurfaceKind kind_ = SurfaceKind::Torus;
  std::shared_ptr<const origami::Origami> surface_;
  std::vector<std::vector<std::int64_t>> i_;
};

}  // namespace horoteich::curvegraph
