#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// Extended Euclid: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
struct Bezout {
  Integer g, s, t;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

/// Floor division and the matching non-negative remainder (for b > 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& value);

inline std::string to_string(const Integer& value) { return value.str(); }
std::string to_string(const Rational& value);

}  // namespace toric
