#pragma once

#include <stdexcept>
#include <string>

namespace cochain {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidIndexSet : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Raised by exact division when the divisor does not divide the dividend.
/// Inside the blending operators this signals a broken divisibility claim.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class IncompatibleTraces : public Error {
 public:
  using Error::Error;
};

}  // namespace cochain
