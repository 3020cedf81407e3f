#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacarena {

enum class ErrorCode {
  kIncompatibleRings,
  kParseError,
  kUnknownVariable,
  kInvalidCertificate,
  kNotAUnit,
  kNotFiniteDimensional,
  kNotZeroDimensional,
  kNotMonogenic,
  kLeadingCoefficientZero,
  kNonMonicDependence,
  kSaturationCapExceeded,
  kIllegalMove,
  kNotInJacobsonRadical,
  kUnsupportedRing,
  kBudgetOverflow,
  kWrongBudget,
  kNotFinite,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the engine; the code identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jacarena
