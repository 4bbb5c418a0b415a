#pragma once

#include <stdexcept>
#include <string>

namespace cpwall {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole (e.g. polygamma at a nonpositive integer).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An approximation was requested outside its validity window.
class ValidityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series, quadrature or extrapolation failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A root search found no sign change inside its bracket.
class NoBracketError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// A least-squares problem is rank deficient (degenerate window).
class IllConditionedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A result is not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpwall
