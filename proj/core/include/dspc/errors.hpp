#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dspc {

enum class ErrorCode {
  kCycleDetected,
  kInvariantViolation,
  kShapeMismatch,
  kLimitExceeded,
  kOracleTooLarge,
  kProjectionInvalid,
  kContextInvalid,
  kNoDonorFound,
  kWitnessInvalid,
  kColorMissing,
  kPatternNotCubicBipartite,
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace dspc
