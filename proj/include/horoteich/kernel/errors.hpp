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

#include <stdexcept>
#include <string>
#include <utility>

namespace horoteich {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search ran out of budget before it could certify its
/// answer. `best()` is the best value reached (a lower bound for suprema, the
/// best achieved error for searches).
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, double best)
      : Error(what), best_(best) {}
  double best() const noexcept { return best_; }

 private:
  double best_;
};

/// Two independent routes to the same quantity disagreed beyond slack. This
/// signals a bug, never bad input.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace horoteich
