#include "bicirc/error.hpp"

namespace bicirc {

namespace {

constexpr std::string_view kErrorNames[] = {
    "ParseError",       "InvalidSpec",          "NotInS",
    "NotAUnit",         "TooLarge",             "NotApplicable",
    "ClassificationFailed", "SurgeryBroken",    "ResolutionFailed",
    "PreconditionUnmet", "Disconnected",        "NotAlternating",
    "OddM0",            "WitnessInvalid",       "MissingOuterEdge",
    "PathsInconsistent", "ElusiveInput",        "WiringFailed",
    "NoValidX",         "NotFoundWithinBudget",
};

}  // namespace

std::string_view to_string(ErrorCode code) {
  return kErrorNames[static_cast<int>(code)];
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace bicirc
