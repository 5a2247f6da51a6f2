#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcnid {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (wrong Δ dimension, column count, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A product would exceed the configured dimension cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this kind of network (e.g. a BN-only
/// query on a network with inputs).
class NetworkKindError : public Error {
 public:
  using Error::Error;
};

/// Logged data contradicts a deterministic model or the sampling protocol.
class DataInconsistency : public Error {
 public:
  using Error::Error;
};

/// Malformed network source, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bcnid
