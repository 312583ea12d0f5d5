#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace critgroup {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a / gcd(a, b) * b);
}

/// True when `d` divides `a`, with the convention that only 0 is divisible by 0.
inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return a % d == 0;
}

/// Least nonnegative residue of `a` modulo `m` (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline IntVector to_integers(const std::vector<std::int64_t>& v) {
  return IntVector(v.begin(), v.end());
}

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace critgroup
