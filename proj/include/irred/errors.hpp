#ifndef IRRED_ERRORS_HPP
#define IRRED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irred {

// Base of every error the library throws on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A clause containing a complementary pair was handed to a constructor.
class TautologyError : public Error {
 public:
  explicit TautologyError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  // DIMACS line of the offending clause, 0 when not parsed from text.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An exhaustive enumeration would exceed its configured size bound.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownClauseId : public Error {
 public:
  using Error::Error;
};

class ScopeError : public Error {
 public:
  using Error::Error;
};

class InconsistentRevisor : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SharedVariablesError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace irred

#endif  // IRRED_ERRORS_HPP
