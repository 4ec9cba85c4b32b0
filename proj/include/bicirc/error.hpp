#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicirc {

enum class ErrorCode {
  kParse,
  kInvalidSpec,
  kNotInS,
  kNotAUnit,
  kTooLarge,
  kNotApplicable,
  kClassificationFailed,
  kSurgeryBroken,
  kResolutionFailed,
  kPreconditionUnmet,
  kDisconnected,
  kNotAlternating,
  kOddM0,
  kWitnessInvalid,
  kMissingOuterEdge,
  kPathsInconsistent,
  kElusiveInput,
  kWiringFailed,
  kNoValidX,
  kBudgetExhausted,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bicirc
