#pragma once

#include <stdexcept>
#include <string>

namespace knotepi {

// Root of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial is not exactly divisible") {}
};

class ZeroDivisor : public Error {
 public:
  ZeroDivisor() : Error("division by the zero polynomial") {}
};

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& op) : Error(op + ": zero polynomial has no unit class") {}
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class NoEpimorphism : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(std::string check)
      : Error("certificate verification failed at check '" + check + "'"), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
  // 0 when the input has no line structure
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidBounds : public Error {
 public:
  using Error::Error;
};

}  // namespace knotepi
