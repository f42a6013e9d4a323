#pragma once

#include <stdexcept>
#include <string>

namespace rectcover {

enum class ErrorCode {
  NotOrthogonal,
  SelfIntersecting,
  CollinearRedundantVertex,
  TooFewVertices,
  Degenerate,
  NotContained,
  NotSimple,
  EmptyKernel,
  NotProper,
  NotInKernel,
  NotRoot,
  InvalidInputSupport,
  NotMaximalMember,
  BadParameter,
  GenerationFailed,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rectcover
