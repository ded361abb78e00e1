#pragma once

#include <stdexcept>
#include <string>

namespace tdouble {

enum class ErrorCode {
  ParseError,
  CrossrefError,
  InvalidGroup,
  NotSubgroup,
  InvalidGSet,
  InvalidCocycle,
  DivisionByZero,
  MismatchedAlgebra,
  CoboundaryMismatch,
  InvalidModule,
  NotProjective,
  NotRootOfUnity,
  IllConditioned,
  Unsupported,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tdouble
