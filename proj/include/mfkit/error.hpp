#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a configurable step/pair budget runs out.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotIsolated : public Error {
 public:
  using Error::Error;
};

class Inhomogeneous : public Error {
 public:
  using Error::Error;
};

// Quantum dimensions are only defined here for graded input.
class Ungraded : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mfkit
