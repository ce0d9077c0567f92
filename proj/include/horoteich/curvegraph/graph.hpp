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

#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "horoteich/curvegraph/curve_set.hpp"
#include "horoteich/kernel.hpp"

namespace horoteich::curvegraph {

/// Immutable simple graph on vertices 0..n-1.
class CurveGraph {
 public:
  explicit CurveGraph(std::size_t n) : adj_(n, std::vector<bool>(n, false)), nbrs_(n) {}

  std::size_t size() const { return adj_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).at(v); }
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return nbrs_.at(u); }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& nb : nbrs_) e += nb.size();
    return e / 2;
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v : nbrs_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  friend CurveGraph build_graph(const CurveSet&);
  void add_edge(std::size_t u, std::size_t v) {
    adj_[u][v] = adj_[v][u] = true;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
};

/// Edge (u, v) iff u != v and the curves are disjoint.
inline CurveGraph build_graph(const CurveSet& cs) {
  CurveGraph g(cs.size());
  for (std::size_t u = 0; u < cs.size(); ++u) {
    for (std::size_t v = u + 1; v < cs.size(); ++v) {
      if (cs.i(u, v) == 0) g.add_edge(u, v);
    }
  }
  return g;
}

/// All BFS distances from u; nullopt marks vertices unreachable inside the
/// finite sample.
inline std::vector<std::optional<std::size_t>> distances_from(const CurveGraph& g, std::size_t u) {
  if (u >= g.size()) throw InvalidInput("vertex out of range");
  std::vector<std::optional<std::size_t>> d(g.size());
  std::queue<std::size_t> q;
  d[u] = 0;
  q.push(u);
  while (!q.empty()) {
    const std::size_t a = q.front();
    q.pop();
    for (std::size_t b : g.neighbors(a)) {
      if (!d[b]) {
        d[b] = *d[a] + 1;
        q.push(b);
      }
    }
  }
  return d;
}

/// Shortest-path edge count, or nullopt (Unreachable) across components.
inline std::optional<std::size_t> graph_distance(const CurveGraph& g, std::size_t u, std::size_t v) {
  if (v >= g.size()) throw InvalidInput("vertex out of range");
  return distances_from(g, u)[v];
}

/// Distance table of the whole graph, one BFS per row in parallel.
inline std::vector<std::vector<std::optional<std::size_t>>> distance_matrix(const CurveGraph& g) {
  std::vector<std::vector<std::optional<std::size_t>>> out(g.size());
  parallel_for(g.size(), [&](std::size_t u) { out[u] = distances_from(g, u); });
  return out;
}

/// Rejects maps that are not bijections of {0..n-1}.
inline void require_bijection(const std::vector<std::size_t>& sigma, std::size_t n) {
  if (sigma.size() != n) {
    throw InvalidInput("vertex map has " + std::to_string(sigma.size()) + " entries for " + std::to_string(n) +
                       " vertices");
  }
  std::vector<bool> hit(n, false);
  for (std::size_t x : sigma) {
    if (x >= n || hit[x]) throw InvalidInput("vertex map is not a bijection");
    hit[x] = true;
  }
}

/// True iff sigma preserves adjacency and non-adjacency.
inline bool automorphism_check(const CurveGraph& g, const std::vector<std::size_t>& sigma) {
  require_bijection(sigma, g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(sigma[u], sigma[v])) return false;
    }
  }
  return true;
}

}  // namespace horoteich::curvegraph
