#ifndef DNKIT_ERROR_HPP
#define DNKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnkit {

/// Base class for every error raised by the library. Each subclass names
/// one failure mode so that callers (the CLI in particular) can report it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero") {}
};

class MissingVariableError : public Error {
 public:
  explicit MissingVariableError(const std::string& var)
      : Error("assignment does not cover variable " + var) {}
};

class PoleError : public Error {
 public:
  PoleError() : Error("denominator vanishes at the assignment") {}
};

class DegreeLimitError : public Error {
 public:
  DegreeLimitError(unsigned degree, unsigned limit)
      : Error("total degree " + std::to_string(degree) +
              " exceeds the degree limit " + std::to_string(limit)) {}
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class WordLengthError : public Error {
 public:
  using Error::Error;
};

class ContextMismatchError : public Error {
 public:
  ContextMismatchError() : Error("operands live in different jet contexts") {}
};

class ArityError : public Error {
 public:
  ArityError(std::size_t expected, std::size_t got)
      : Error("expected " + std::to_string(expected) + " arguments, got " +
              std::to_string(got)) {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " +
              what),
        detail_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

class UnknownLetterError : public Error {
 public:
  UnknownLetterError(unsigned letter, unsigned alphabet)
      : Error("derivation letter D" + std::to_string(letter) +
              " is outside the alphabet D1..D" + std::to_string(alphabet)) {}
};

}  // namespace dnkit

#endif  // DNKIT_ERROR_HPP
