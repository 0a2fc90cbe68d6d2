#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (non-prime p, degree not
/// dividing, mismatched parents, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or extension search would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Always indicates a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// The two sides of a trace formula disagreed.
class VerificationMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, std::string key, const std::string& what)
      : Error(format(line, key, what)), line_(line), key_(std::move(key)) {}

  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  static std::string format(int line, const std::string& key, const std::string& what) {
    std::string out = "line " + std::to_string(line);
    if (!key.empty()) out += ", key '" + key + "'";
    return out + ": " + what;
  }

  int line_;
  std::string key_;
};

}  // namespace lefschetz
