#ifndef STCUT_ERRORS_H_
#define STCUT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace stcut {

enum class ErrorCode {
  kInvalidGraph,
  kEmptySide,
  kFullSide,
  kSourceSinkMerged,
  kUnknownEdge,
  kUnknownVertex,
  kInfeasibleFlow,
  kNotAPath,
  kNoCarrierPath,
  kPreconditionViolated,
  kNoSecondMincut,
  kTooLarge,
  kUnsupported,
  kParseError,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

class CutError : public std::runtime_error {
 public:
  CutError(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace stcut

#endif  // STCUT_ERRORS_H_
