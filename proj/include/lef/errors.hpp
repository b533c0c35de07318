#pragma once

#include <stdexcept>
#include <string>

namespace lef {

// Base class for every domain error thrown by the library; the CLI maps
// these to exit code 3.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class ContextMismatch : public Error {
public:
  ContextMismatch() : Error("field context mismatch") {}
};

class IndexOutOfRange : public Error {
public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class NotSquare : public Error {
public:
  NotSquare() : Error("matrix is not square") {}
};

class InvalidParameter : public Error {
public:
  explicit InvalidParameter(const std::string& what) : Error(what) {}
};

class NonArtinianSection : public Error {
public:
  NonArtinianSection() : Error("non-Artinian section") {}
};

class NotTrueLifting : public Error {
public:
  NotTrueLifting() : Error("not a true lifting (2 <= char <= t)") {}
};

class NotArtinianInRange : public Error {
public:
  NotArtinianInRange() : Error("quotient is not Artinian within the degree bound") {}
};

}  // namespace lef
