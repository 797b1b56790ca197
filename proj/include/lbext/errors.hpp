#pragma once

#include <stdexcept>
#include <string>

namespace lbext {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text, file or command-line input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NotASubBialgebra : public Error {
 public:
  using Error::Error;
};

class SingularQ : public Error {
 public:
  SingularQ() : Error("q: V -> V is not invertible") {}
};

class SampleNotInASpace : public Error {
 public:
  using Error::Error;
};

/// A constrained datum was built with a component that must vanish.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lbext
