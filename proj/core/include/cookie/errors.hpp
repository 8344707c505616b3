#pragma once

#include <stdexcept>
#include <string>

namespace cookie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A cookie strength lies outside [1/2, 1].
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// The number of strengths does not match the number of cookies.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A simulated walk exhausted its step budget before reaching the target level.
class StepCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A generating function was evaluated outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The migration chain has no invariant probability (recurrent walk).
class NotPositiveRecurrent : public Error {
 public:
  using Error::Error;
};

/// An iterative solver ran out of budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Not enough tail mass to fit an exponent.
class InsufficientTail : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is undefined in this phase.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A linear coefficient vanished where a division is needed.
class DegenerateCoefficient : public Error {
 public:
  using Error::Error;
};

}  // namespace cookie
