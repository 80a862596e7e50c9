#ifndef BSAKS_ERROR_HPP
#define BSAKS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bsaks {

enum class ErrorCode {
  kShapeMismatch,
  kNonRepresentable,
  kUndefinedPairing,
  kHorizonTooSmall,
  kSearchBudgetExceeded,
  kCapExceeded,
  kNonPolyhedralNorm,
  kPreconditionViolation,
  kBetaEstimateUnstable,
  kUnregisteredFamily,
  kInvalidIndexMap,
  kParse,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bsaks

#endif  // BSAKS_ERROR_HPP
