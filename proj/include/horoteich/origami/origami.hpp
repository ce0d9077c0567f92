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
#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "horoteich/kernel.hpp"

namespace horoteich::origami {

using Permutation = std::vector<int>;

/// Cycles of a permutation of {0..n-1}, each starting at its smallest
/// element, listed in order of that element.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int i = static_cast<int>(s); !seen[i]; i = p[i]) {
      seen[i] = true;
      cyc.push_back(i);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

inline Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

/// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline std::string cycles_string(const Permutation& p, int base = 1) {
  std::string s;
  for (const auto& c : cycles(p)) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + std::to_string(c[k] + base);
    s += ")";
  }
  return s;
}

/// One-line 1-based array form, e.g. "[2,1,3]".
inline std::string permutation_string(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i] + 1);
  return s + "]";
}

/// Parses a 1-based bracketed array ("[2,1,3]", spaces allowed) into a
/// 0-based list. Bijectivity is checked by the Origami constructor.
inline Permutation parse_permutation(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') t += ch;
  }
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw InvalidInput("permutation '" + text + "' must be a bracketed 1-based array such as [2,1,3]");
  }
  Permutation out;
  std::size_t pos = 1;
  while (pos < t.size() - 1) {
    const std::size_t comma = std::min(t.find(',', pos), t.size() - 1);
    const std::string item = t.substr(pos, comma - pos);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw InvalidInput("permutation '" + text + "' has a non-integer entry");
    out.push_back(static_cast<int>(value) - 1);
    pos = comma + 1;
  }
  if (out.empty()) throw InvalidInput("permutation '" + text + "' is empty");
  return out;
}

/// The h and v permutations generate a non-transitive group.
class DisconnectedSurface : public InvalidInput {
 public:
  DisconnectedSurface(const std::string& what, std::vector<std::vector<int>> orbits)
      : InvalidInput(what), orbits_(std::move(orbits)) {}
  const std::vector<std::vector<int>>& orbits() const noexcept { return orbits_; }

 private:
  std::vector<std::vector<int>> orbits_;
};

/// Square-tiled translation surface: n unit squares, h(i) the right
/// neighbor and v(i) the top neighbor of square i. Squares are 0-based.
class Origami {
 public:
  Origami(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
    if (h_.empty()) throw InvalidInput("origami needs at least one square");
    if (h_.size() != v_.size()) throw InvalidInput("h and v must act on the same ground set");
    check_permutation(h_, "h");
    check_permutation(v_, "v");
    hi_ = inverse(h_);
    vi_ = inverse(v_);
    check_connected();
    // Counterclockwise turn around the lower-left corner of a square.
    const Permutation turn = compose(v_, compose(h_, compose(vi_, hi_)));
    vertex_of_.assign(h_.size(), -1);
    for (const auto& c : cycles(turn)) {
      for (int i : c) vertex_of_[i] = static_cast<int>(angle_.size());
      angle_.push_back(static_cast<int>(c.size()));
    }
  }

  /// From one-line 1-based images, e.g. h = [2, 1, 3].
  static Origami from_one_based(const std::vector<int>& h, const std::vector<int>& v) {
    auto shift = [](const std::vector<int>& p) {
      Permutation q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] - 1;
      return q;
    };
    return Origami(shift(h), shift(v));
  }
  /// Square torus tiled by one square.
  static Origami square_torus() { return Origami({0}, {0}); }

  int n() const { return static_cast<int>(h_.size()); }
  int area() const { return n(); }
  const Permutation& h() const { return h_; }
  const Permutation& v() const { return v_; }
  int right(int i) const { return h_[i]; }
  int left(int i) const { return hi_[i]; }
  int top(int i) const { return v_[i]; }
  int bottom(int i) const { return vi_[i]; }

  /// Vertex at the lower-left corner of square i.
  int vertex_of(int i) const { return vertex_of_[i]; }
  int vertex_count() const { return static_cast<int>(angle_.size()); }
  /// Cone angle of vertex k in units of 2 pi.
  int cone_angle(int k) const { return angle_[k]; }
  bool singular(int vertex) const { return angle_[vertex] > 1; }

  /// Corner vertices of square i.
  int lower_left(int i) const { return vertex_of_[i]; }
  int lower_right(int i) const { return vertex_of_[h_[i]]; }
  int upper_left(int i) const { return vertex_of_[v_[i]]; }
  int upper_right(int i) const { return vertex_of_[h_[v_[i]]]; }

  /// Euler characteristic V - E + F = V - 2n + n.
  int genus() const { return (n() - vertex_count() + 2) / 2; }

  /// Orders (cone angle / 2 pi - 1) of the singular vertices, descending.
  std::vector<int> singularity_orders() const {
    std::vector<int> out;
    for (int a : angle_) {
      if (a > 1) out.push_back(a - 1);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  friend bool operator==(const Origami& a, const Origami& b) { return a.h_ == b.h_ && a.v_ == b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Origami& o) {
    return os << "h=" << cycles_string(o.h_) << " v=" << cycles_string(o.v_);
  }

 private:
  static void check_permutation(const Permutation& p, const char* name) {
    std::vector<bool> hit(p.size(), false);
    for (int x : p) {
      if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) {
        throw InvalidInput(std::string(name) + " is not a permutation of the squares");
      }
      hit[x] = true;
    }
  }

  void check_connected() const {
    const int n = static_cast<int>(h_.size());
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < n; ++s) {
      if (label[s] >= 0) continue;
      std::vector<int> orbit{s};
      label[s] = static_cast<int>(orbits.size());
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (int nb : {h_[orbit[k]], v_[orbit[k]], hi_[orbit[k]], vi_[orbit[k]]}) {
          if (label[nb] < 0) {
            label[nb] = label[s];
            orbit.push_back(nb);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
    if (orbits.size() > 1) {
      std::string msg = "disconnected surface: <h, v> has " + std::to_string(orbits.size()) + " orbits";
      for (const auto& o : orbits) {
        msg += " {";
        for (std::size_t k = 0; k < o.size(); ++k) msg += (k ? "," : "") + std::to_string(o[k] + 1);
        msg += "}";
      }
      throw DisconnectedSurface(msg, std::move(orbits));
    }
  }

  Permutation h_, v_, hi_, vi_;
  std::vector<int> vertex_of_;
  std::vector<int> angle_;
};

inline Origami build_origami(Permutation h, Permutation v) { return Origami(std::move(h), std::move(v)); }

/// Relabeling from breadth-first search rooted at `root`: label[i] is the
/// new name of square i.
inline std::vector<int> bfs_labels(const Origami& o, int root) {
  std::vector<int> label(o.n(), -1);
  std::vector<int> order{root};
  label[root] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int nb : {o.right(order[k]), o.top(order[k])}) {
      if (label[nb] < 0) {
        label[nb] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    }
  }
  return label;
}

/// The origami with square i renamed label[i].
inline Origami relabel(const Origami& o, const std::vector<int>& label) {
  Permutation h(o.n()), v(o.n());
  for (int i = 0; i < o.n(); ++i) {
    h[label[i]] = label[o.right(i)];
    v[label[i]] = label[o.top(i)];
  }
  return Origami(std::move(h), std::move(v));
}

/// sigma with sigma(h_a(i)) = h_b(sigma(i)) and likewise for v, if any.
inline std::optional<std::vector<int>> find_isomorphism(const Origami& a, const Origami& b) {
  if (a.n() != b.n()) return std::nullopt;
  const int n = a.n();
  for (int target = 0; target < n; ++target) {
    std::vector<int> sigma(n, -1);
    std::vector<int> stack{0};
    sigma[0] = target;
    bool ok = true;
    while (ok && !stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      const std::pair<int, int> moves[4] = {{a.right(i), b.right(sigma[i])},
                                            {a.top(i), b.top(sigma[i])},
                                            {a.left(i), b.left(sigma[i])},
                                            {a.bottom(i), b.bottom(sigma[i])}};
      for (const auto& [ai, bi] : moves) {
        if (sigma[ai] < 0) {
          sigma[ai] = bi;
          stack.push_back(ai);
        } else if (sigma[ai] != bi) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return sigma;
  }
  return std::nullopt;
}

inline bool isomorphic(const Origami& a, const Origami& b) { return find_isomorphism(a, b).has_value(); }

/// Lexicographically least relabeling over all BFS roots; equal for
/// isomorphic origamis.
inline Origami canonical_form(const Origami& o) {
  std::optional<Origami> best;
  for (int r = 0; r < o.n(); ++r) {
    Origami c = relabel(o, bfs_labels(o, r));
    if (!best || std::make_pair(c.h(), c.v()) < std::make_pair(best->h(), best->v())) best = std::move(c);
  }
  return *best;
}

}  // namespace horoteich::origami
