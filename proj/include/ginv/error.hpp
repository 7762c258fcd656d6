#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginv {

// Base for every failure raised by the library. The CLI maps subclasses to
// exit codes, so new error kinds must pick a side: input (2) or domain (1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operand could not be read.
class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed request: wrong descriptor kind, missing operand, unknown name.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Domain failures: the input is well formed but the requested inverse does
// not exist (or a precondition of the operation is not met).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotGroupInvertible : public DomainError {
 public:
  NotGroupInvertible() : DomainError("not group invertible: rank(a^2) < rank(a)") {}
};

class NotBcInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotTwoInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionViolated : public DomainError {
 public:
  using DomainError::DomainError;
};

class Inconsistent : public DomainError {
 public:
  using DomainError::DomainError;
};

// A verification gate tripped on a value that should exist by construction.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ginv
