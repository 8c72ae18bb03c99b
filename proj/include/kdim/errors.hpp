#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is the 0-based offset of the offending token.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at column " + std::to_string(position + 1)), position(position) {}
  std::size_t position;
};

struct UnknownAtomError : Error {
  explicit UnknownAtomError(const std::string& name)
      : Error("unknown atom '" + name + "'"), name(name) {}
  std::string name;
};

struct MissingSymDataError : Error {
  using Error::Error;
};

struct MissingMeasureDataError : Error {
  using Error::Error;
};

struct DegreeMismatchError : Error {
  using Error::Error;
};

/// Structurally invalid input files (fans, incidences, atom tables).
struct ValidationError : Error {
  using Error::Error;
};

/// Argument outside the domain of an operation: non-permitted denominators,
/// non-invertible elements, exceeded truncation orders.
struct DomainError : Error {
  using Error::Error;
};

}  // namespace kdim
