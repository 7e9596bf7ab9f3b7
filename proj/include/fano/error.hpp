#pragma once

#include <stdexcept>
#include <string>

namespace fano {

// Raised for x/0 in any exact field.
struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Operand shapes do not agree (matrix sizes, variable lists, bases).
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed text input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A structural invariant did not hold (certificate, representation, ring).
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fano
