#pragma once

#include <stdexcept>
#include <string>

namespace f2hopf {

// Base for every failure raised by the algebra engine.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation would produce Q^i g with i above the configured bound.
class GeneratorIndexError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Exponent, weight or dimension arithmetic left the int64 range.
class ExponentOverflow : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// A tensor or element that should lie in a family span does not.
class SpanError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// A configured size bound (k bound, basis size) was exceeded.
class BoundError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Input violates an operation's precondition.
class PreconditionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace f2hopf
