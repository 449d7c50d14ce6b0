#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvmodal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two truth values (or a value and a model) disagree on the number of truth values.
class ResolutionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Model construction or model precondition failure (unknown world, name clash, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Formula does not fit the semantics it is evaluated under.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured number of world types or models.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed; indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvmodal
