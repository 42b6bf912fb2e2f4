#pragma once

#include <stdexcept>
#include <string>

namespace arrtop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, invariant violations on user data, bad arguments.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument is outside the operation's domain.
class ArgumentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A computation would exceed its configured search/enumeration budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagree, or a proven identity failed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrtop
