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

struct KerckhoffResult {
  double value = 0.0;        // 1/2 log of the best enumerated ratio (from below)
  double upper = 0.0;        // certified upper bound
  double closed_form = 0.0;  // 1/2 hyperbolic_distance
  TorusCurve witness{1, 0};
  std::size_t nodes = 0;
};

/// Teichmuller distance as 1/2 log sup_gamma Ext_{tau1}(gamma) / Ext_{tau2}(gamma),
/// enumerated over Farey cones until value and upper agree within tol.
inline KerckhoffResult kerckhoff_distance(const UpperHalfPoint& tau1, const UpperHalfPoint& tau2, double tol,
                                          std::size_t cap = 1'000'000) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  KerckhoffResult out;
  out.closed_form = 0.5 * hyperbolic_distance(tau1, tau2);
  FareySupResult sup;
  try {
    sup = farey_ratio_sup(ext_form(tau1), ext_form(tau2), 2.0 * tol, cap);
  } catch (const BudgetExhausted& e) {
    throw BudgetExhausted("Kerckhoff enumeration budget exhausted before tolerance was certified",
                          0.5 * std::log(e.best()));
  }
  out.value = 0.5 * std::log(sup.best);
  out.upper = 0.5 * std::log(sup.upper);
  out.witness = sup.witness;
  out.nodes = sup.nodes;
  return out;
}

/// sup_gamma i(f, gamma)^2 / Ext_tau(gamma), which equals Ext_tau(f).
inline FareySupResult ext_as_sup(const UpperHalfPoint& tau, const WeightedTorusFoliation& f, double rel_tol,
                                 std::size_t cap = 1'000'000) {
  QuadraticForm num = intersection_square_form(f.curve);
  const double w2 = to_double(f.weight * f.weight);
  num.a *= w2;
  num.b *= w2;
  num.c *= w2;
  return farey_ratio_sup(num, ext_form(tau), std::log1p(rel_tol), cap);
}

}  // namespace horoteich::torus
