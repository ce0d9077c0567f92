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
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "horoteich/curvegraph.hpp"
#include "horoteich/kernel.hpp"
#include "horoteich/origami.hpp"
#include "horoteich/torus.hpp"
#include "json.hpp"

namespace horoteich::cli {

using Json = nlohmann::ordered_json;

// Numeric fields are objects carrying exact: true, a bracket or a tolerance.

inline Json exact(const Rational& r) { return {{"value", to_double(r)}, {"rational", to_string(r)}, {"exact", true}}; }
inline Json exact(std::int64_t n) { return {{"value", n}, {"exact", true}}; }
inline Json exact_count(std::size_t n) { return exact(static_cast<std::int64_t>(n)); }
inline Json approx(double v, double tol) { return {{"value", v}, {"tolerance", tol}}; }
inline Json bracketed(double v, const Bracket& b) { return {{"value", v}, {"bracket", {b.lo(), b.hi()}}}; }
inline Json bracketed(const Bracket& b) { return bracketed(b.mid(), b); }

inline Json point(const UpperHalfPoint& p, double tol) { return {{"re", p.x()}, {"im", p.y()}, {"tolerance", tol}}; }

inline Json int_matrix(const std::vector<std::vector<std::int64_t>>& m) { return {{"rows", m}, {"exact", true}}; }

inline std::string curve_string(const torus::TorusCurve& c) { return std::to_string(c.p()) + "," + std::to_string(c.q()); }

// ---- argument parsing ----

inline std::vector<std::string> split(const std::string& s, char sep) { return curvegraph::detail::split(s, sep); }

inline torus::TorusCurve parse_curve(const std::string& text) {
  const auto [p, q] = curvegraph::detail::parse_pair(text, "curve");
  return torus::TorusCurve(p, q);
}

inline Rational parse_positive_rational(const std::string& text, const std::string& what) {
  const Rational r = parse_rational(text);
  if (!(r > 0)) throw InvalidInput(what + " must be positive (got " + text + ")");
  return r;
}

inline double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || !std::isfinite(v)) {
    throw InvalidInput(what + ": '" + text + "' is not a finite real number");
  }
  return v;
}

inline std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_real(s, what));
  return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_rational(s));
  return out;
}

/// "a,b,c,d" row-major.
inline Mat2<Rational> parse_rational_matrix(const std::string& text) {
  const auto e = parse_rational_list(text);
  if (e.size() != 4) throw InvalidInput("matrix '" + text + "' must have four comma-separated entries a,b,c,d");
  return {e[0], e[1], e[2], e[3]};
}

inline IntMat2 parse_int_matrix(const std::string& text) {
  const auto e = split(text, ',');
  if (e.size() != 4) throw InvalidInput("matrix '" + text + "' must have four comma-separated entries a,b,c,d");
  IntMat2 m{curvegraph::detail::parse_int(e[0], "matrix entry"), curvegraph::detail::parse_int(e[1], "matrix entry"),
            curvegraph::detail::parse_int(e[2], "matrix entry"), curvegraph::detail::parse_int(e[3], "matrix entry")};
  if (!is_unimodular(m)) throw InvalidInput("matrix '" + text + "' is not unimodular (det must be +-1)");
  return m;
}

/// Exact real and imaginary parts of "a+bi"; the imaginary part must be positive.
inline std::pair<Rational, Rational> parse_exact_point(const std::string& text) {
  parse_upper_half_point(text);  // format and sign diagnostics
  std::string s = text.substr(0, text.size() - 1);
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  Rational re(0);
  std::string im = s;
  if (cut != std::string::npos) {
    re = parse_rational(s.substr(0, cut));
    im = s.substr(cut);
  }
  if (!im.empty() && im.front() == '+') im.erase(0, 1);
  const Rational y = im.empty() ? Rational(1) : (im == "-" ? Rational(-1) : parse_rational(im));
  if (!(y > 0)) throw InvalidInput("point " + text + " is not in the upper half plane");
  return {re, y};
}

inline std::vector<UpperHalfPoint> parse_point_list(const std::string& text) {
  std::vector<UpperHalfPoint> out;
  for (const auto& s : split(text, ';')) out.push_back(parse_upper_half_point(s));
  return out;
}

inline origami::Origami parse_origami(const std::string& h, const std::string& v, std::optional<int> n) {
  if (h.empty() || v.empty()) throw InvalidInput("origami needs both --h and --v permutations");
  const auto ph = origami::parse_permutation(h), pv = origami::parse_permutation(v);
  if (ph.size() != pv.size()) {
    throw InvalidInput("h has " + std::to_string(ph.size()) + " squares but v has " + std::to_string(pv.size()));
  }
  if (n && *n != static_cast<int>(ph.size())) {
    throw InvalidInput("n = " + std::to_string(*n) + " does not match the permutation length " +
                       std::to_string(ph.size()));
  }
  return origami::Origami(ph, pv);
}

/// "H<k>" / "V<k>": core of the k-th horizontal / vertical cylinder (1-based);
/// "dx,dy": closed geodesic from square 1; otherwise a full trace descriptor
/// "dx,dy@square:L|B:offset".
inline origami::CurveTrace parse_trace(const origami::Origami& o, const std::string& text) {
  if (!text.empty() && (text[0] == 'H' || text[0] == 'V')) {
    const auto axis = text[0] == 'H' ? origami::Axis::Horizontal : origami::Axis::Vertical;
    const auto cyl = origami::cylinders(o, axis);
    const std::int64_t k = curvegraph::detail::parse_int(text.substr(1), "cylinder index");
    if (k < 1 || k > static_cast<std::int64_t>(cyl.size())) {
      throw InvalidInput("cylinder " + text + " out of range (" + std::to_string(cyl.size()) + " " +
                         origami::axis_name(axis) + " cylinders)");
    }
    return origami::cylinder_core(o, cyl[static_cast<std::size_t>(k - 1)]);
  }
  if (text.find('@') == std::string::npos) {
    const auto [dx, dy] = curvegraph::detail::parse_pair(text, "trace direction");
    if (dx == 0 && dy == 0) throw InvalidInput("trace direction must be nonzero");
    return origami::trace_from(o, 0, {dx, dy});
  }
  return std::get<origami::CurveTrace>(curvegraph::parse_payload(text, &o));
}

// ---- output ----

namespace detail {

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "." + std::to_string(k), out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace detail

/// One header line of flattened keys and one row of values.
inline std::string to_csv(const Json& record) {
  std::vector<std::pair<std::string, std::string>> cells;
  detail::flatten(record, "", cells);
  std::string head, row;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    head += (k ? "," : "") + detail::csv_field(cells[k].first);
    row += (k ? "," : "") + detail::csv_field(cells[k].second);
  }
  return head + "\n" + row + "\n";
}

}  // namespace horoteich::cli
