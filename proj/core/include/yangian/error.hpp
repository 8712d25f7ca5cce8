#pragma once

#include <stdexcept>
#include <string>

namespace yangian {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a value sits on a pole of a rational expression.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Raised when a requested series coefficient lies outside the exact window.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Raised when family or representation constraints are violated.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Raised when operands live on incompatible spaces.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

// Raised by solvers when no solution or more than one solution exists.
class SolveError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace yangian
