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
#include <complex>
#include <ostream>
#include <string>

#include "horoteich/kernel/errors.hpp"
#include "horoteich/kernel/mat2.hpp"

namespace horoteich {

/// A point tau = x + iy of the upper half-plane, y > 0.
class UpperHalfPoint {
 public:
  UpperHalfPoint(double x, double y) : x_(x), y_(y) {
    if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
      throw InvalidInput("upper half-plane point needs finite x and y > 0");
    }
  }
  explicit UpperHalfPoint(std::complex<double> z) : UpperHalfPoint(z.real(), z.imag()) {}

  double x() const { return x_; }
  double y() const { return y_; }
  std::complex<double> z() const { return {x_, y_}; }

  friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;
  friend std::ostream& operator<<(std::ostream& os, const UpperHalfPoint& p) {
    return os << p.x_ << (p.y_ >= 0 ? "+" : "") << p.y_ << "i";
  }

 private:
  double x_;
  double y_;
};

/// (a tau + b) / (c tau + d); rejects det <= 0.
template <class T>
UpperHalfPoint mobius_apply(const Mat2<T>& m, const UpperHalfPoint& tau) {
  const Mat2<double> md = m.template cast<double>();
  if (!(md.det() > 0.0)) throw InvalidInput("Mobius action needs a matrix with positive determinant");
  const std::complex<double> z = tau.z();
  const std::complex<double> w = (md.a * z + md.b) / (md.c * z + md.d);
  // Im w = det * Im z / |c z + d|^2, computed directly to keep it positive.
  const double denom = std::norm(md.c * z + md.d);
  return UpperHalfPoint(w.real(), md.det() * tau.y() / denom);
}

/// Curvature -1 distance arccosh(1 + |z1 - z2|^2 / (2 y1 y2)), evaluated as
/// 2 asinh(|z1 - z2| / (2 sqrt(y1 y2))) for accuracy at short range.
inline double hyperbolic_distance(const UpperHalfPoint& p, const UpperHalfPoint& q) {
  const double chord = std::hypot(p.x() - q.x(), p.y() - q.y());
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y() * q.y())));
}

/// Parses "a+bi", "a-bi", "bi", "a" (no spaces).
inline UpperHalfPoint parse_upper_half_point(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw InvalidInput("empty complex literal");
  if (s.back() != 'i') throw InvalidInput("complex literal must end in 'i' (format a+bi): " + text);
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  try {
    double re = 0.0, im = 0.0;
    std::string im_text;
    if (split == std::string::npos) {
      im_text = s;
    } else {
      re = std::stod(s.substr(0, split));
      im_text = s.substr(split);
    }
    if (im_text.empty() || im_text == "+") im = 1.0;
    else if (im_text == "-") im = -1.0;
    else {
      std::size_t used = 0;
      im = std::stod(im_text, &used);
      if (used != im_text.size()) throw InvalidInput("malformed complex literal: " + text);
    }
    return UpperHalfPoint(re, im);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("malformed complex literal (format a+bi): " + text);
  }
}

}  // namespace horoteich
