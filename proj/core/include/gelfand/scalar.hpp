#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>

#include "gelfand/bigint.hpp"
#include "gelfand/errors.hpp"

namespace gelfand {

// A class-function value. Exact-backend tables produce exact rationals,
// approximate-backend tables produce complex doubles; the two never mix
// within one computation.
class Scalar {
public:
  Scalar() : v_(BigRat(0)) {}
  explicit Scalar(BigRat r) : v_(std::move(r)) {}
  explicit Scalar(long long n) : v_(BigRat(n)) {}
  explicit Scalar(std::complex<double> z) : v_(z) {}

  bool exact() const { return std::holds_alternative<BigRat>(v_); }

  const BigRat& rational() const { return std::get<BigRat>(v_); }

  std::complex<double> as_complex() const {
    if (exact()) return {to_double(rational()), 0.0};
    return std::get<std::complex<double>>(v_);
  }

  Scalar conj() const {
    if (exact()) return *this;
    return Scalar(std::conj(std::get<std::complex<double>>(v_)));
  }

  // Mixing backends inside one computation is a bug, not a rounding issue.
  Scalar operator*(const Scalar& o) const {
    if (exact() != o.exact()) throw Error("mixed exact/approximate scalars");
    if (exact()) return Scalar(rational() * o.rational());
    return Scalar(as_complex() * o.as_complex());
  }

  Scalar operator+(const Scalar& o) const {
    if (exact() != o.exact()) throw Error("mixed exact/approximate scalars");
    if (exact()) return Scalar(rational() + o.rational());
    return Scalar(as_complex() + o.as_complex());
  }

  // Accepts the value as a nonnegative integer multiplicity: exact values
  // must be true integers; approximate values must sit within tol of the
  // nearest real integer (distance taken in the complex plane).
  long long to_multiplicity(double tol) const {
    if (exact()) {
      const BigRat& r = rational();
      if (boost::multiprecision::denominator(r) != 1) {
        throw IntegralityError("non-integral multiplicity " + str());
      }
      if (r < 0) {
        throw NegativeCoefficientError("negative multiplicity " + str());
      }
      return to_int64(boost::multiprecision::numerator(r));
    }
    std::complex<double> z = std::get<std::complex<double>>(v_);
    double rounded = std::round(z.real());
    if (std::abs(z - std::complex<double>(rounded, 0.0)) >= tol) {
      throw IntegralityError("multiplicity misses the integer window: " + str());
    }
    if (rounded < 0) {
      throw NegativeCoefficientError("negative multiplicity " + str());
    }
    return static_cast<long long>(rounded);
  }

  // Canonical rendering: exact rationals exactly; approximate values as the
  // nearest integer when within 1e-9, otherwise as a formatted complex.
  std::string str() const {
    if (exact()) {
      const BigRat& r = rational();
      if (boost::multiprecision::denominator(r) == 1) {
        return boost::multiprecision::numerator(r).str();
      }
      return r.str();
    }
    std::complex<double> z = std::get<std::complex<double>>(v_);
    double rounded = std::round(z.real());
    if (std::abs(z.imag()) < 1e-9 && std::abs(z.real() - rounded) < 1e-9) {
      return std::to_string(static_cast<long long>(rounded));
    }
    char buf[64];
    if (std::abs(z.imag()) < 1e-9) {
      std::snprintf(buf, sizeof(buf), "%.12g", z.real());
    } else {
      std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
    }
    return buf;
  }

private:
  std::variant<BigRat, std::complex<double>> v_;
};

}  // namespace gelfand
