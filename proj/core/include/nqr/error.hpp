#pragma once

#include <stdexcept>
#include <string>

namespace nqr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuiverError : public Error {
 public:
  using Error::Error;
};

class InvalidCycle : public Error {
 public:
  using Error::Error;
};

class InvalidMonomial : public Error {
 public:
  using Error::Error;
};

class QuiverMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class CalibrationError : public Error {
 public:
  CalibrationError(const std::string& what, std::string evidence)
      : Error(what), evidence_(std::move(evidence)) {}
  const std::string& evidence() const noexcept { return evidence_; }

 private:
  std::string evidence_;
};

}  // namespace nqr
