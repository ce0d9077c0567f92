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
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "horoteich/kernel.hpp"
#include "horoteich/origami/origami.hpp"

namespace horoteich::origami {

enum class Axis { Horizontal, Vertical };

inline const char* axis_name(Axis a) { return a == Axis::Horizontal ? "horizontal" : "vertical"; }

/// Maximal cylinder in the horizontal or vertical direction, in base
/// (unit-square) coordinates.
struct CylinderCurve {
  Axis axis = Axis::Horizontal;
  std::vector<int> squares;   // core cycle, in traversal order
  std::vector<int> members;   // every square of the cylinder, sorted
  std::int64_t circumference = 1;
  std::int64_t height = 1;    // extent across the cylinder
  Vec2<std::int64_t> holonomy{1, 0};

  std::int64_t area() const { return circumference * height; }
  friend bool operator==(const CylinderCurve& a, const CylinderCurve& b) {
    return a.axis == b.axis && a.members == b.members && a.squares == b.squares;
  }
};

struct CylinderDecomposition {
  std::vector<CylinderCurve> cylinders;
  std::vector<int> cylinder_of;  // per square
};

/// Cycles of the axis permutation are strips of height one; neighboring
/// strips whose shared boundary carries no singular vertex belong to the
/// same maximal cylinder.
inline CylinderDecomposition cylinder_decomposition(const Origami& o, Axis axis) {
  const bool horiz = axis == Axis::Horizontal;
  const Permutation& along = horiz ? o.h() : o.v();
  const auto strips = cycles(along);
  std::vector<int> strip_of(o.n());
  for (std::size_t k = 0; k < strips.size(); ++k) {
    for (int i : strips[k]) strip_of[i] = static_cast<int>(k);
  }
  std::vector<int> parent(strips.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < strips.size(); ++k) {
    bool regular = true;
    for (int i : strips[k]) {
      // Boundary toward the next strip: top edges (horizontal) or right edges (vertical).
      const int corner = horiz ? o.upper_left(i) : o.lower_right(i);
      if (o.singular(corner)) regular = false;
    }
    if (!regular) continue;
    const int next = horiz ? o.top(strips[k][0]) : o.right(strips[k][0]);
    const int a = find(static_cast<int>(k)), b = find(strip_of[next]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  CylinderDecomposition out;
  out.cylinder_of.assign(o.n(), -1);
  std::vector<int> index(strips.size(), -1);
  for (std::size_t k = 0; k < strips.size(); ++k) {
    const int root = find(static_cast<int>(k));
    if (index[root] < 0) {
      index[root] = static_cast<int>(out.cylinders.size());
      CylinderCurve c;
      c.axis = axis;
      c.squares = strips[root];
      c.circumference = static_cast<std::int64_t>(strips[root].size());
      c.height = 0;
      c.holonomy = horiz ? Vec2<std::int64_t>{c.circumference, 0} : Vec2<std::int64_t>{0, c.circumference};
      out.cylinders.push_back(std::move(c));
    }
    CylinderCurve& c = out.cylinders[index[root]];
    if (static_cast<std::int64_t>(strips[k].size()) != c.circumference) {
      throw ConsistencyFailure("merged strips of a cylinder have different lengths");
    }
    c.height += 1;
    for (int i : strips[k]) {
      c.members.push_back(i);
      out.cylinder_of[i] = index[root];
    }
  }
  for (auto& c : out.cylinders) std::sort(c.members.begin(), c.members.end());
  return out;
}

inline std::vector<CylinderCurve> cylinders(const Origami& o, Axis axis) {
  return cylinder_decomposition(o, axis).cylinders;
}

}  // namespace horoteich::origami
