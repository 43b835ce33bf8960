#ifndef COQUIVER_ERROR_HPP
#define COQUIVER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coquiver {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (ambient dimensions, matrix sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A structure fails its defining identities (coassociativity, coaction laws).
class AxiomError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input lies outside what the implementation supports.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed coalgebra or quiver text.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column = 0)
      : Error("line " + std::to_string(line) +
              (column > 0 ? ", column " + std::to_string(column) : "") + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An internal cross-check failed: the implementation disagrees with itself.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace coquiver

#endif
