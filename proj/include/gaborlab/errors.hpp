#pragma once

#include <stdexcept>
#include <string>

namespace gaborlab {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand sizes or groups do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Wigner/Weyl paths need 2 to be invertible mod N.
class ParityError : public Error {
 public:
  using Error::Error;
};

class LatticeError : public Error {
 public:
  using Error::Error;
};

class NotAFrameError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ContourError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A required inverse does not exist; a special precondition failure.
class SingularityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Invalid experiment configuration; `field` is the dotted path of the
// offending entry (e.g. "lattice.a").
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace gaborlab
