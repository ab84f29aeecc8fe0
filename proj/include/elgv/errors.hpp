#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "elgv/natural.hpp"

namespace elgv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  NotInvertibleError(const Natural& value, const Natural& modulus, Natural gcd)
      : Error(to_decimal(value) + " is not invertible modulo " + to_decimal(modulus) +
              " (gcd " + to_decimal(gcd) + ")"),
        gcd_(std::move(gcd)) {}
  const Natural& gcd() const { return gcd_; }

 private:
  Natural gcd_;
};

class NoSolutionError : public Error {
 public:
  using Error::Error;
};

class NotSmoothError : public Error {
 public:
  NotSmoothError(Natural cofactor, const Natural& bound)
      : Error("composite cofactor " + to_decimal(cofactor) + " has no prime factor <= " +
              to_decimal(bound)),
        cofactor_(std::move(cofactor)) {}
  const Natural& cofactor() const { return cofactor_; }

 private:
  Natural cofactor_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class InvalidNonceError : public Error {
 public:
  using Error::Error;
};

/// Signing produced s = 0; the caller must draw a fresh nonce.
class ResampleRequired : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

class GenerationTimeout : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace elgv
