#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secreg {

// Base of everything the library throws on bad input or failed computation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A claim about the input turned out false mid-computation (e.g. a
// constructed surface has the wrong degree).
class ComputationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace secreg
