#ifndef EDGECOUNT_ERROR_HPP
#define EDGECOUNT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace edgecount {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (graph files, DIMACS, gadget names).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An argument violates a documented precondition of the operation
/// (wrong arity, kappa out of range, gadget without the key property, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A result the library computed contradicts an internal invariant.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace edgecount

#endif // EDGECOUNT_ERROR_HPP
