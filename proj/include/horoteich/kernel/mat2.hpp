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

#include <cmath>
#include <cstdint>
#include <ostream>
#include <type_traits>

#include "horoteich/kernel/errors.hpp"
#include "horoteich/kernel/rational.hpp"

namespace horoteich {

template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
  friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
  friend Vec2 operator*(const T& k, const Vec2& v) { return {k * v.x, k * v.y}; }
  friend bool operator==(const Vec2& u, const Vec2& v) { return u.x == v.x && u.y == v.y; }
};

template <class T>
T cross(const Vec2<T>& u, const Vec2<T>& v) {
  return u.x * v.y - u.y * v.x;
}
template <class T>
T dot(const Vec2<T>& u, const Vec2<T>& v) {
  return u.x * v.x + u.y * v.y;
}

/// 2x2 matrix [[a, b], [c, d]] acting on column vectors.
template <class T>
struct Mat2 {
  T a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }

  Vec2<T> operator*(const Vec2<T>& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
  }

  Vec2<T> column(int j) const { return j == 0 ? Vec2<T>{a, c} : Vec2<T>{b, d}; }

  /// Inverse; for integer T only valid when det = +-1.
  Mat2 inverse() const {
    const T dt = det();
    if (dt == T(0)) throw InvalidInput("singular matrix has no inverse");
    if constexpr (std::is_integral_v<T>) {
      if (dt != 1 && dt != -1) throw InvalidInput("integer matrix is not unimodular");
    }
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  template <class U>
  Mat2<U> cast() const {
    if constexpr (std::is_same_v<T, Rational> && std::is_same_v<U, double>) {
      return {to_double(a), to_double(b), to_double(c), to_double(d)};
    } else {
      return {U(a), U(b), U(c), U(d)};
    }
  }
};

using IntMat2 = Mat2<std::int64_t>;

/// Geodesic flow g_t = diag(e^t, e^-t) on (x, y) holonomy vectors.
inline Mat2<double> geodesic_matrix(double t) { return {std::exp(t), 0.0, 0.0, std::exp(-t)}; }

/// Horocycle flow in (x, y) ordering: x' = x, y' = y + s x. In (dy, dx)
/// ordering this is [[1, s], [0, 1]]; it fixes the vertical measure |dx|.
template <class T>
Mat2<T> horocycle_matrix(const T& s) {
  return {T(1), T(0), s, T(1)};
}

inline bool is_unimodular(const IntMat2& m) {
  const auto dt = m.det();
  return dt == 1 || dt == -1;
}

}  // namespace horoteich
