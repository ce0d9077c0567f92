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
#include <limits>
#include <ostream>

#include "horoteich/kernel/errors.hpp"

namespace horoteich {

/// Closed enclosure [lo, hi] of a real quantity. Every composition widens
/// its result outward by one unit in the last place, so an enclosure of the
/// inputs yields an enclosure of the output. hi may be +inf.
class Bracket {
 public:
  Bracket(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) throw InvalidInput("bracket needs lo <= hi");
  }

  static Bracket exact(double v) { return Bracket(v, v); }
  /// [down(v), up(v)]: encloses a value whose computation was correctly rounded.
  static Bracket around(double v) { return Bracket(down(v), up(v)); }
  static Bracket at_least(double lo) { return Bracket(lo, std::numeric_limits<double>::infinity()); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return bounded() ? 0.5 * (lo_ + hi_) : lo_; }
  double width() const { return hi_ - lo_; }
  bool bounded() const { return std::isfinite(hi_); }
  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool is_nonnegative() const { return lo_ >= 0.0; }

  friend Bracket operator+(const Bracket& p, const Bracket& q) {
    return Bracket(down(p.lo_ + q.lo_), up(p.hi_ + q.hi_));
  }
  friend Bracket operator-(const Bracket& p, const Bracket& q) {
    return Bracket(down(p.lo_ - q.hi_), up(p.hi_ - q.lo_));
  }
  /// Product of nonnegative brackets.
  friend Bracket operator*(const Bracket& p, const Bracket& q) {
    if (!p.is_nonnegative() || !q.is_nonnegative()) throw InvalidInput("bracket product needs nonnegative factors");
    return Bracket(down(p.lo_ * q.lo_), up(p.hi_ * q.hi_));
  }
  /// Quotient of a nonnegative bracket by a strictly positive one.
  friend Bracket operator/(const Bracket& p, const Bracket& q) {
    if (!p.is_nonnegative() || !(q.lo_ > 0.0)) throw InvalidInput("bracket quotient needs p >= 0, q > 0");
    return Bracket(down(p.lo_ / q.hi_), up(p.hi_ / q.lo_));
  }
  Bracket scaled(double k) const {
    if (!(k >= 0.0)) throw InvalidInput("bracket scale needs k >= 0");
    return Bracket(down(lo_ * k), up(hi_ * k));
  }

  friend Bracket log(const Bracket& p) {
    if (!(p.lo_ > 0.0)) throw InvalidInput("bracket log needs lo > 0");
    return Bracket(down(std::log(p.lo_)), up(std::log(p.hi_)));
  }
  friend Bracket sqrt(const Bracket& p) {
    if (!p.is_nonnegative()) throw InvalidInput("bracket sqrt needs lo >= 0");
    return Bracket(down(std::sqrt(p.lo_)), up(std::sqrt(p.hi_)));
  }

  /// Certified strict comparisons; both false means undecided.
  bool certainly_below(double v) const { return hi_ < v; }
  bool certainly_above(double v) const { return lo_ > v; }

  friend std::ostream& operator<<(std::ostream& os, const Bracket& b) {
    return os << "[" << b.lo_ << ", " << b.hi_ << "]";
  }

  static double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
  static double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

 private:
  double lo_;
  double hi_;
};

}  // namespace horoteich
