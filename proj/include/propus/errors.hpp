#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace propus {

// Base for every failure a construction route can report. Precondition
// violations on plain arguments (empty rows, bad shifts) use
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHadamard : public Error {
 public:
  using Error::Error;
};

class NotCirculantInput : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class NotInCatalog : public Error {
 public:
  using Error::Error;
};

class BadResidue : public Error {
 public:
  using Error::Error;
};

class WrongResidue : public Error {
 public:
  using Error::Error;
};

class AsymmetricX : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class InvalidConferencePair : public Error {
 public:
  using Error::Error;
};

class ConditionsFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace propus
