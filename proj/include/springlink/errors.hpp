#pragma once

#include <stdexcept>
#include <string>

namespace springlink {

// Base type for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside its mathematical domain (angle beyond the stroke,
// attachment fraction outside [0,1], negative length, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Configuration that can never be valid: bad stroke bounds, a spring with
// both endpoints on one link, unusable CLI flag combinations.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a kinematic singularity (formulas that blow up at the
// fully upright posture theta = pi).
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Stiffness solving requested for a spring whose charging force is
// identically zero over the stroke.
class UnsolvableError : public Error {
 public:
  using Error::Error;
};

// A robot record lacks every measurement a prediction needs.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Malformed catalogue or profile input; message names row and field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace springlink
