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

#include "horoteich/kernel/errors.hpp"

namespace horoteich::horolab {

template <class T>
struct TripleLevels {
  T r;  // level of HS(alpha, .)
  T s;  // level of HS(beta, .)
  T t;  // level of HS(gamma, .)
};

/// Unique positive solution of r s = i_ab^2, r t = i_ag^2, s t = i_bg^2.
/// Exact for Rational inputs.
template <class T>
TripleLevels<T> triple_solve(const T& i_ab, const T& i_ag, const T& i_bg) {
  if (!(i_ab > T(0)) || !(i_ag > T(0)) || !(i_bg > T(0))) {
    throw InvalidInput("triple tangency needs all three pairs filling (intersection numbers > 0)");
  }
  return {i_ab * i_ag / i_bg, i_ab * i_bg / i_ag, i_ag * i_bg / i_ab};
}

}  // namespace horoteich::horolab
