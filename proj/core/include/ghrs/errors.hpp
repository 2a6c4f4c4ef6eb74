#ifndef GHRS_ERRORS_HPP
#define GHRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghrs {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeTooHigh : public Error {
 public:
  using Error::Error;
};

class DuplicatePoints : public Error {
 public:
  using Error::Error;
};

class ZeroMultiplier : public Error {
 public:
  using Error::Error;
};

class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class CaseOutOfRange : public Error {
 public:
  using Error::Error;
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroSeed : public Error {
 public:
  using Error::Error;
};

/// An internally checked identity failed to hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ghrs

#endif  // GHRS_ERRORS_HPP
