#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sftflow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of operands are incompatible (non-square, length mismatch, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A standing hypothesis of an operation does not hold: reducible or
// permutation matrix, non-positive ceiling, empty word set.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A shift-equivalence certificate fails one of its defining relations.
class CertificateError : public Error {
 public:
  using Error::Error;
};

// Bounded witness search would exceed its candidate budget.
class SearchSpaceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sftflow
