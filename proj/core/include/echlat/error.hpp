#pragma once

#include <stdexcept>
#include <string>

namespace echlat {

// Base of every error raised by the library. The CLI maps these to exit code 1,
// except InternalVerificationFailure which signals a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidParams : public DomainError {
 public:
  using DomainError::DomainError;
};

class OutOfDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotCoprime : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonPositiveInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrecisionFailure : public Error {
 public:
  using Error::Error;
};

class InternalVerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace echlat
