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
#include <cstddef>

#include "horoteich/kernel.hpp"
#include "horoteich/torus/curve.hpp"
#include "horoteich/torus/farey_sup.hpp"

namespace horoteich::torus {

/// i(F, G) for G the horizontal foliation of the differential of F at x0:
/// the norm of that differential, Ext_x0(F).
inline double walsh_transverse(const WeightedTorusFoliation& f, const UpperHalfPoint& x0) {
  return extremal_length(x0, f);
}

/// E_F(gamma) = i(F, gamma)^2 / i(F, G).
inline double walsh_E(const WeightedTorusFoliation& f, const TorusCurve& gamma, const UpperHalfPoint& x0) {
  const double i = to_double(f.weight) * static_cast<double>(intersection(f.curve, gamma));
  return i * i / walsh_transverse(f, x0);
}

struct WalshBusemann {
  double value = 0.0;
  double sup_x = 0.0;   // sup_gamma E(gamma) / Ext_x(gamma)
  double sup_x0 = 0.0;  // same at x0
  double upper = 0.0;   // certified upper bound on value
  double lower = 0.0;   // certified lower bound on value
};

/// 1/2 log sup E/Ext_x - 1/2 log sup E/Ext_x0, each sup enumerated over curves.
inline WalshBusemann walsh_busemann(const UpperHalfPoint& x0, const WeightedTorusFoliation& f,
                                    const UpperHalfPoint& x, double rel_tol = 1e-12,
                                    std::size_t cap = 1'000'000) {
  QuadraticForm num = intersection_square_form(f.curve);
  const double k = to_double(f.weight * f.weight) / walsh_transverse(f, x0);
  num.a *= k;
  num.b *= k;
  num.c *= k;
  const FareySupResult sx = farey_ratio_sup(num, ext_form(x), std::log1p(rel_tol), cap);
  const FareySupResult s0 = farey_ratio_sup(num, ext_form(x0), std::log1p(rel_tol), cap);
  WalshBusemann out;
  out.sup_x = sx.best;
  out.sup_x0 = s0.best;
  out.value = 0.5 * (std::log(sx.best) - std::log(s0.best));
  out.upper = 0.5 * (std::log(sx.upper) - std::log(s0.best));
  out.lower = 0.5 * (std::log(sx.best) - std::log(s0.upper));
  return out;
}

}  // namespace horoteich::torus
