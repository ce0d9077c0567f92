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
#include <cstdint>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "horoteich/kernel/errors.hpp"

namespace horoteich {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  // The backend requires a positive denominator on construction.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}
inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return make_rational(BigInt(num), BigInt(den)); }

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

/// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidInput("non-finite value has no rational form");
  return Rational(x);
}

inline std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Decimal integer literal with optional sign. Leading zeros are stripped
/// (cpp_int's string constructor reads them as an octal prefix).
inline BigInt parse_bigint(const std::string& text) {
  std::size_t k = 0;
  bool negative = false;
  if (k < text.size() && (text[k] == '+' || text[k] == '-')) negative = text[k++] == '-';
  if (k == text.size()) throw InvalidInput("malformed integer: " + text);
  for (std::size_t j = k; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw InvalidInput("malformed integer: " + text);
  }
  while (k + 1 < text.size() && text[k] == '0') ++k;
  BigInt v(text.substr(k));
  return negative ? BigInt(-v) : v;
}

/// Parses "a", "a/b" or a decimal literal such as "0.125" or "-3.5e-2"
/// (decimal literals are read exactly as written, not via binary floating
/// point).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const BigInt num = parse_bigint(text.substr(0, slash));
      const BigInt den = parse_bigint(text.substr(slash + 1));
      if (den == 0) throw InvalidInput("rational with zero denominator: " + text);
      return make_rational(num, den);
    }
    std::string mantissa = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
      mantissa = text.substr(0, e);
      exponent = std::stol(text.substr(e + 1));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa = mantissa.substr(1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char ch : mantissa) {
      if (ch == '.') {
        if (seen_point) throw InvalidInput("malformed number: " + text);
        seen_point = true;
      } else if (ch >= '0' && ch <= '9') {
        digits.push_back(ch);
        if (seen_point) ++frac_digits;
      } else {
        throw InvalidInput("malformed number: " + text);
      }
    }
    if (digits.empty()) throw InvalidInput("malformed number: " + text);
    Rational value{parse_bigint(digits)};
    const long shift = exponent - frac_digits;
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(shift)));
    if (shift >= 0) value *= scale;
    else value /= scale;
    if (negative) value = -value;
    return value;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("malformed number: " + text);
  }
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
  std::int64_t g, x, y;
};
inline Bezout bezout(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Floor division for signed integers.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace horoteich
