#pragma once

#include <stdexcept>
#include <string>

namespace ltf {

// Bad user input: non-prime p, inconsistent bounds, malformed files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Working precision too small for a certificate to be possible.
class PrecisionError : public ValidationError {
 public:
  PrecisionError(const std::string& what, long required)
      : ValidationError(what + " (need precision >= " + std::to_string(required) + ")"),
        required_(required) {}
  long required() const { return required_; }

 private:
  long required_;
};

// Two routes that must agree did not. `check` names the identity that failed.
class ConsistencyError : public std::logic_error {
 public:
  ConsistencyError(std::string check, const std::string& detail)
      : std::logic_error(check + ": " + detail), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

class ImpossibleValuation : public ConsistencyError {
 public:
  explicit ImpossibleValuation(const std::string& detail)
      : ConsistencyError("ImpossibleValuation", detail) {}
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class NotInImage : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ltf
