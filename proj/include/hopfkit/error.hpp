#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input (bad expression, bad rule orientation,
/// non-Lie structure constants, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : ValidationError("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The input is well formed but the requested computation is not meaningful
/// on it (non-confluent presentation, non-connected coalgebra, ...).
class RefusedError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfkit
