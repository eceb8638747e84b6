#pragma once

#include <stdexcept>
#include <string>

namespace basilica {

// Malformed user input (word syntax, vertex addresses, file contents).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested level or size exceeds what fits in memory.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating point failure: overflow, eigensolver residual, lifting ambiguity.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on a numeric input was violated (e.g. a path through a
// branch point).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent routes disagreed; indicates a bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace basilica
