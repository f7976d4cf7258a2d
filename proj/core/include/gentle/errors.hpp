#ifndef GENTLE_ERRORS_HPP
#define GENTLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gentle {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Rejected input: malformed data, violated preconditions, unsupported
// structure (e.g. a non-gentle quiver passed to an operation that needs
// gentleness).  Maps to CLI exit code 2.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// Parse failure for the .bq text format; carries a 1-based position.
// column == 0 means the error is attached to the line as a whole.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError("line " + std::to_string(line) +
                   (column > 0 ? ", column " + std::to_string(column) : std::string()) +
                   ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A uniqueness or bijectivity guarantee that holds for every gentle bound
// quiver failed on data that passed the gentleness check.  Indicates either
// a corrupted structure or a bug; maps to CLI exit code 1.
class StructureViolation : public Error {
 public:
  explicit StructureViolation(const std::string& what) : Error(what) {}
};

// An operation produced output that failed its own postcondition.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

// The random generator could not reach the requested size within its retry
// budget.
class GeneratorError : public Error {
 public:
  explicit GeneratorError(const std::string& what) : Error(what) {}
};

}  // namespace gentle

#endif  // GENTLE_ERRORS_HPP
