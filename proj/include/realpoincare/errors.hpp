#pragma once

#include <stdexcept>
#include <string>

namespace realpoincare {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Input parses but violates a standing assumption (non-primitive parametrization, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Well-formed request that is undefined for this input (e.g. splitting data of a real branch).
struct DomainError : Error {
  using Error::Error;
};

/// A coefficient at or above the truncation order was requested. Callers may
/// rerun the computation at a higher truncation.
struct PrecisionExhausted : Error {
  using Error::Error;
};

/// A configured resource bound (truncation cap, oracle matrix size) was exceeded.
struct ResourceLimit : Error {
  using Error::Error;
};

/// An internal identity that must hold failed. Always a bug.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace realpoincare
