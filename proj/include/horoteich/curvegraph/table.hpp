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
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "horoteich/curvegraph/curve_set.hpp"
#include "horoteich/kernel.hpp"
#include "horoteich/origami.hpp"
#include "horoteich/torus.hpp"

namespace horoteich::curvegraph {

/// Payload descriptor: "p,q" for a torus class; "dx,dy@square:edge:offset"
/// for a trace, square 1-based, edge L or B, offset rational.
inline std::string payload_descriptor(const CurvePayload& p) {
  if (const auto* c = std::get_if<torus::TorusCurve>(&p)) return std::to_string(c->p()) + "," + std::to_string(c->q());
  const auto& t = std::get<origami::CurveTrace>(p);
  return std::to_string(t.direction().x) + "," + std::to_string(t.direction().y) + "@" +
         std::to_string(t.start().square + 1) + ":" + (t.start().edge == origami::Edge::Left ? "L" : "B") + ":" +
         to_string(t.start().offset);
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw InvalidInput(what + ": '" + s + "' is not an integer");
  return v;
}

inline std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw InvalidInput(what + ": '" + s + "' must be two comma-separated integers");
  return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

}  // namespace detail

/// Parses a payload descriptor; traces are re-traced on o.
inline CurvePayload parse_payload(const std::string& text, const origami::Origami* o) {
  const auto at = text.find('@');
  if (at == std::string::npos) {
    const auto [p, q] = detail::parse_pair(text, "torus curve");
    return torus::TorusCurve(p, q);
  }
  if (!o) throw InvalidInput("trace descriptor '" + text + "' needs an origami surface line");
  const auto [dx, dy] = detail::parse_pair(text.substr(0, at), "trace direction");
  const auto start = detail::split(text.substr(at + 1), ':');
  if (start.size() != 3 || (start[1] != "L" && start[1] != "B")) {
    throw InvalidInput("trace start '" + text.substr(at + 1) + "' must read square:L|B:offset");
  }
  const std::int64_t sq = detail::parse_int(start[0], "trace square");
  if (sq < 1 || sq > o->n()) throw InvalidInput("trace square " + start[0] + " out of range");
  const origami::TraceStart st{static_cast<int>(sq - 1), start[1] == "L" ? origami::Edge::Left : origami::Edge::Bottom,
                               parse_rational(start[2])};
  return origami::trace_curve(*o, st, {dx, dy});
}

/// Tab-separated table: a surface line, a header, then one row per curve
/// with id, payload descriptor and its row of the intersection table.
inline std::string to_table(const CurveSet& cs) {
  std::ostringstream os;
  if (cs.kind() == SurfaceKind::Torus) {
    os << "#surface\ttorus\n";
  } else {
    os << "#surface\torigami\th=" << origami::permutation_string(cs.surface().h())
       << "\tv=" << origami::permutation_string(cs.surface().v()) << "\n";
  }
  os << "id\tpayload\ti\n";
  for (std::size_t u = 0; u < cs.size(); ++u) {
    os << cs.vertex(u).id << "\t" << payload_descriptor(cs.vertex(u).payload) << "\t";
    for (std::size_t v = 0; v < cs.size(); ++v) os << (v ? " " : "") << cs.i(u, v);
    os << "\n";
  }
  return os.str();
}

/// Inverse of to_table. The stored table must agree with the recomputed one
/// (ConsistencyFailure otherwise); an empty i column skips the comparison.
inline CurveSet parse_table(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<origami::Origami> surface;
  bool have_surface = false, have_header = false;
  std::vector<CurveVertex> vertices;
  std::vector<std::vector<std::int64_t>> stored;
  bool check = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cols = detail::split(line, '\t');
    if (!have_surface) {
      if (cols[0] != "#surface" || cols.size() < 2) throw InvalidInput("table must start with a #surface line");
      if (cols[1] == "origami") {
        if (cols.size() != 4 || cols[2].rfind("h=", 0) != 0 || cols[3].rfind("v=", 0) != 0) {
          throw InvalidInput("origami surface line must read #surface, origami, h=[...], v=[...]");
        }
        surface = origami::Origami(origami::parse_permutation(cols[2].substr(2)),
                                   origami::parse_permutation(cols[3].substr(2)));
      } else if (cols[1] != "torus") {
        throw InvalidInput("unknown surface '" + cols[1] + "'");
      }
      have_surface = true;
      continue;
    }
    if (!have_header) {
      if (cols[0] != "id") throw InvalidInput("missing id/payload/i header");
      have_header = true;
      continue;
    }
    if (cols.size() < 2 || cols.size() > 3) throw InvalidInput("row '" + line + "' must have 2 or 3 columns");
    const CurvePayload p = parse_payload(cols[1], surface ? &*surface : nullptr);
    if (surface.has_value() != std::holds_alternative<origami::CurveTrace>(p)) {
      throw InvalidInput("payload '" + cols[1] + "' does not match the surface line");
    }
    vertices.push_back({cols[0], p});
    std::vector<std::int64_t> row;
    if (cols.size() == 3 && !cols[2].empty()) {
      for (const auto& e : detail::split(cols[2], ' ')) row.push_back(detail::parse_int(e, "intersection entry"));
    } else {
      check = false;
    }
    stored.push_back(std::move(row));
  }
  if (!have_header) throw InvalidInput("table has no header");
  CurveSet cs(std::move(vertices));
  if (check && stored != cs.i_matrix()) {
    throw ConsistencyFailure("stored intersection table disagrees with the recomputed one");
  }
  return cs;
}

}  // namespace horoteich::curvegraph
