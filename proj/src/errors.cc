#include "stcut/errors.h"

namespace stcut {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kFullSide: return "FullSide";
    case ErrorCode::kSourceSinkMerged: return "SourceSinkMerged";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kInfeasibleFlow: return "InfeasibleFlow";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kNoCarrierPath: return "NoCarrierPath";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNoSecondMincut: return "NoSecondMincut";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

CutError::CutError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw CutError(code, message);
}

}  // namespace stcut
