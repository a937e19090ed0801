#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2 {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotAUnit,
  DescriptorMismatch,
  DomainMismatch,
  NotFinite,
  AntipodalPair,
  InconsistentSigns,
  NoCalibrationFound,
  NotPlusMinusOne,
  ThreeNotInvertible,
  NoLongDecomposition,
  NoAdjacentLongRoot,
  NotOfRootForm,
  LengthMismatch,
  SearchExhausted,
  NotLocal,
  NotMaximal,
  UndecidableBase,
  NoIsomorphism,
  NotExact,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the contract
/// that was violated; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace g2
