#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permreg {

enum class ErrorCode {
  kDuplicateIndex,
  kOutOfRange,
  kDimensionMismatch,
  kConvergenceFailure,
  kInvalidDimensions,
  kInvalidArgument,
  kInstanceTooLarge,
  kRankTooLarge,
  kInvalidGamma,
  kDegenerateFit,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace permreg
