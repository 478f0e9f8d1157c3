#pragma once

#include <stdexcept>
#include <string>

namespace motrace {

enum class ErrorCode {
  ParseError,
  FieldMismatch,
  ZeroRepresentative,
  InputTooLarge,
  NotPrime,
  SqrtMinusOneRequired,
  InvalidExpr,
  EnumerationCapExceeded,
  DegreeCapExceeded,
  CapExceeded,
  DimensionMismatch,
  IllTypedTerm,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a position (1-based line/column) into the message so
// front ends can surface it verbatim.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& what)
      : Error(ErrorCode::ParseError,
              "parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace motrace
