#pragma once

#include <stdexcept>
#include <string>

namespace slit {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Rational function has a pole at t = 0 and therefore no Taylor series there.
class NotAPowerSeries : public Error {
 public:
  using Error::Error;
};

class NonSquareMatrix : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Invalid problem parameters (width, heights, weights, partition data).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numeric routine failed to reach its tolerance.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

// Roots too close together for the bialternant evaluation.
class DegenerateRoots : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (CLI arguments, problem files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace slit
