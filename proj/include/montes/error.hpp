#pragma once

#include <stdexcept>
#include <string>

namespace montes {

enum class ErrorKind {
  ZeroInput,
  NonMonicDivisor,
  NonMonic,
  NotPrime,
  ReducibleModulus,
  DivisionByZero,
  FieldMismatch,
  EmptyCloud,
  DegreeTooLarge,
  ZeroPolynomial,
  InsufficientV,
  Inseparable,
  InconsistentLevels,
  NotIrreducible,
  SharedRoot,
  DegreeMismatch,
  AlreadyExact,
  IterationCapExceeded,
  PrecisionTooLow,
  ParseError,
  Internal,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace montes
