#pragma once

#include <set>
#include <stdexcept>
#include <string>

namespace witt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DenominatorVanishes : public Error {
 public:
  DenominatorVanishes() : Error("denominator vanishes at the evaluation point") {}
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class BadArity : public Error {
 public:
  using Error::Error;
};

class BadK : public Error {
 public:
  using Error::Error;
};

class MissingProbe : public Error {
 public:
  using Error::Error;
};

/// Raised by the scalar and element parsers. `position` is a byte offset
/// into the input; `expected` names the token classes that would have been
/// accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::set<std::string> expected, const std::string& detail = {});

  std::size_t position() const noexcept { return position_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::set<std::string> expected_;
};

}  // namespace witt
