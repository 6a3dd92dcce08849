#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polylog {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (ln of a
/// non-positive number, 0 raised to a negative power, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range argument.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The requested sum or integral does not converge.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Valid input that this implementation cannot evaluate.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Operands computed under different precisions, or too little precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an expression, carrying a 0-based source offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at column " + std::to_string(position + 1)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polylog
