#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scrolls {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two operands live in different rings (variables, field or order differ).
struct RingMismatch : Error {
  using Error::Error;
};

/// Inversion of zero (or of a residue divisible by the modulus).
struct DivisionByZero : Error {
  using Error::Error;
};

/// Malformed block spec, field spec or builder parameters.
struct InvalidSpec : Error {
  using Error::Error;
};

/// Family index outside its admissible range.
struct IndexOutOfRange : Error {
  using Error::Error;
};

/// A configured cap (S-pairs, degree, points, wall time) was hit.
/// The computation is abandoned rather than returning a wrong answer.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Text could not be parsed; `position` is a 0-based byte offset.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// An identifier did not resolve to (a product of) ring variables.
struct UnknownVariable : ParseError {
  std::string name;
  UnknownVariable(const std::string& var, std::size_t pos)
      : ParseError("unknown variable '" + var + "'", pos), name(var) {}
};

}  // namespace scrolls
