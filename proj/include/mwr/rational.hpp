// Copyright 2026 The mwr Authors
//
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
#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mwr/errors.hpp"

namespace mwr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// "p/q" or "p" (denominator omitted when 1). Always lowest terms.
inline std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

// Bounds of a sum of fractions: given pairs (x_i, y_i) with x_i >= 0 and
// y_i > 0, the aggregate (sum x)/(sum y) lies between the smallest and the
// largest individual ratio.
struct MediantBounds {
  Rational min_ratio;
  Rational mediant;
  Rational max_ratio;

  bool holds() const { return min_ratio <= mediant && mediant <= max_ratio; }
};

struct Fraction {
  Rational numerator;
  Rational denominator;
};

inline MediantBounds mediant_bounds(std::span<const Fraction> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::kShapeMismatch, "mediant of an empty list");
  }
  Rational sum_x = 0;
  Rational sum_y = 0;
  Rational lo;
  Rational hi;
  bool first = true;
  for (const Fraction& f : parts) {
    if (f.numerator < 0) {
      throw Error(ErrorCode::kNegativeWeight, "numerator must be >= 0");
    }
    if (f.denominator <= 0) {
      throw Error(ErrorCode::kZeroTotalWeight, "denominator must be > 0");
    }
    const Rational r = f.numerator / f.denominator;
    if (first) {
      lo = hi = r;
      first = false;
    } else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    sum_x += f.numerator;
    sum_y += f.denominator;
  }
  return {lo, sum_x / sum_y, hi};
}

}  // namespace mwr
