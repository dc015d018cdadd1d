#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace crownforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<Integer>;

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  if (v.denominator() == 1) return v.numerator().str();
  return v.numerator().str() + "/" + v.denominator().str();
}

inline Integer ipow(Integer base, std::uint64_t exp) {
  Integer r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

/// Floor of a rational, correct for negative values.
inline Integer floor(const Rational& v) {
  Integer q = v.numerator() / v.denominator();
  if (v.numerator() % v.denominator() != 0 && v.numerator() < 0) q -= 1;
  return q;
}

}  // namespace crownforge
