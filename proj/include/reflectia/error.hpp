#pragma once

#include <stdexcept>
#include <string>

namespace reflectia {

// Base class for every error this library throws on purpose.
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
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownGroup : public Error {
 public:
  explicit UnknownGroup(const std::string& name) : Error("unknown group: " + name) {}
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotCoincidental : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace reflectia
