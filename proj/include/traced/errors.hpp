#pragma once

#include <stdexcept>
#include <string>

namespace traced {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Source/target of two morphisms (or a morphism and an object) do not line up.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class NotEndo : public Error {
 public:
  using Error::Error;
};

class CapabilityMissing : public Error {
 public:
  using Error::Error;
};

class NotBordism : public Error {
 public:
  using Error::Error;
};

class NonIntegerLength : public Error {
 public:
  using Error::Error;
};

// Malformed input to a constructor (bad shape, non-preserved grading, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace traced
