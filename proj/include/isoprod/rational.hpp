#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace isoprod {

// Compare only Rational against Rational: under C++20 rewritten comparisons,
// boost's mixed `rational == int` operators recurse into each other.
using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

/// "a" for integers, "a/b" otherwise (always reduced).
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace isoprod
