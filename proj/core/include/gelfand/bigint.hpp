#pragma once

#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "gelfand/errors.hpp"

namespace gelfand {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Checked narrowing. Throws SizeLimitError when the value does not fit.
inline long long to_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) {
    throw SizeLimitError("value does not fit in 64 bits: " + v.str());
  }
  return v.convert_to<long long>();
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRat& v) { return v.convert_to<double>(); }

inline BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace gelfand
