#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordlines {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a precondition: wrong kind, mixed fields, bad index, bad parameter.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but geometrically degenerate (coincident points, collinear triple, ...).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A formula was evaluated outside the regime where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internally guaranteed property failed. Always a bug in this library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A seeded generator could not satisfy its constraints within its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

class DuplicatePointError : public UsageError {
 public:
  DuplicatePointError(std::size_t first, std::size_t second)
      : UsageError("duplicate point: index " + std::to_string(second) +
                   " repeats index " + std::to_string(first)),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace ordlines
