#pragma once

#include <stdexcept>
#include <string>

namespace extri {

/// Base of every error the toolkit reports to callers. The CLI maps these to
/// exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

/// The relation ideal does not contain a power of the arrow ideal within the
/// configured path-length bound.
class NonAdmissibleError : public Error {
 public:
  NonAdmissibleError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class NotSelfInjectiveError : public Error {
 public:
  NotSelfInjectiveError()
      : Error("algebra is not self-injective; the stable category is not triangulated") {}
};

class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotExtensionClosedError : public Error {
 public:
  using Error::Error;
};

/// A cross-check between two independent computations disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace extri
