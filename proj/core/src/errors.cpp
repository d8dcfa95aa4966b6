#include "permreg/errors.hpp"

#include "permreg/matrix.hpp"

namespace permreg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateIndex: return "DuplicateIndex";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::kInvalidDimensions: return "InvalidDimensions";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kRankTooLarge: return "RankTooLarge";
    case ErrorCode::kInvalidGamma: return "InvalidGamma";
    case ErrorCode::kDegenerateFit: return "DegenerateFit";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + " contains non-finite entries");
  }
}

void require_same_rows(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows()) {
    fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": row counts differ (" +
             std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) +
             ")");
  }
}

}  // namespace permreg
