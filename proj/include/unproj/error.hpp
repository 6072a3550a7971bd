#pragma once

#include <stdexcept>
#include <string>

namespace unproj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

/// Operands or arguments belong to different polynomial rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NonHomogeneousError : public Error {
 public:
  using Error::Error;
};

/// Raised by queries that are undefined on the unit ideal.
class UnitIdealError : public Error {
 public:
  UnitIdealError() : Error("ideal is the unit ideal") {}
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace unproj
