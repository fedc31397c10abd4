#pragma once

#include <stdexcept>
#include <string>

namespace locunc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LOCUNC_ERROR(Name)                  \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

LOCUNC_ERROR(InvalidPoint)
LOCUNC_ERROR(DisconnectedMetric)
LOCUNC_ERROR(MetricViolation)
LOCUNC_ERROR(InvalidInstance)
LOCUNC_ERROR(Infeasible)
LOCUNC_ERROR(CapExceeded)
LOCUNC_ERROR(NotATree)
LOCUNC_ERROR(InvalidDecomposition)
LOCUNC_ERROR(InvalidSize)
LOCUNC_ERROR(InvalidScale)
LOCUNC_ERROR(UnsupportedMetric)

#undef LOCUNC_ERROR

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace locunc
