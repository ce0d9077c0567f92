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

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "horoteich/kernel.hpp"

namespace horoteich::horolab {

/// Geometry the horosphere algebra runs on. Intersection numbers are exact;
/// extremal lengths are certified brackets.
///  - sub_coefficients(g, f): coefficients a_i with g = sum a_i F_i over the
///    indecomposable components F_i of f (g precedes f), or nullopt.
///  - horosphere_point(f, level, s): the point at horocycle parameter s on
///    HS(f, level), or nullopt when the backend cannot place one exactly.
template <class B>
concept GeometryBackend = requires(const B& b, const typename B::Point& x, const typename B::Foliation& f,
                                   const Rational& k, double s) {
  typename B::Point;
  typename B::Foliation;
  { b.ext(x, f) } -> std::convertible_to<Bracket>;
  { b.intersect(f, f) } -> std::convertible_to<Rational>;
  { b.scale(f, k) } -> std::convertible_to<typename B::Foliation>;
  { b.component_count(f) } -> std::convertible_to<std::size_t>;
  { b.sub_coefficients(f, f) } -> std::convertible_to<std::optional<std::vector<Rational>>>;
  { b.horosphere_point(f, k, s) } -> std::convertible_to<std::optional<typename B::Point>>;
  { b.geodesic(f, f) } -> std::convertible_to<std::function<typename B::Point(double)>>;
};

/// Backends that also bound Teichmuller distances.
///  - ray_excess(x0, f, x, t): d(x, G(t)) - t along the ray G from x0 toward f.
template <class B>
concept DistanceBackend = GeometryBackend<B> && requires(const B& b, const typename B::Point& x,
                                                         const typename B::Foliation& f, double t) {
  { b.distance(x, x) } -> std::convertible_to<Bracket>;
  { b.ray_excess(x, f, x, t) } -> std::convertible_to<Bracket>;
};

/// Horosphere HS(f, level) = {Ext(f) = level}; HB is the open sublevel set.
template <class F>
struct HoroSpec {
  F foliation;
  Rational level;

  HoroSpec(F f, Rational l) : foliation(std::move(f)), level(std::move(l)) {
    if (!(level > 0)) throw InvalidInput("horosphere level must be positive");
  }
};

}  // namespace horoteich::horolab
