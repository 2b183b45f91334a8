#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

// Base class for all library errors that map to nonzero CLI exit codes.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A documented cap was exceeded (enumeration size, table rank, group order).
class SizeLimitError : public Error {
public:
  using Error::Error;
};

// Malformed table document: bad JSON, missing keys, wrong shapes.
class ParseError : public Error {
public:
  using Error::Error;
};

// A structurally well-formed table failed a mathematical check.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A value that must be a nonnegative integer missed the tolerance window.
class IntegralityError : public Error {
public:
  using Error::Error;
};

// A decomposition coefficient came out below -tolerance.
class NegativeCoefficientError : public Error {
public:
  using Error::Error;
};

// An operation was invoked outside the hypothesis it requires, e.g. a
// non-real target character where realness is assumed.
class HypothesisError : public Error {
public:
  using Error::Error;
};

}  // namespace gelfand
