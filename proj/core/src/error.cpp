#include "g2/error.hpp"

namespace g2 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::AntipodalPair: return "AntipodalPair";
    case ErrorCode::InconsistentSigns: return "InconsistentSigns";
    case ErrorCode::NoCalibrationFound: return "NoCalibrationFound";
    case ErrorCode::NotPlusMinusOne: return "NotPlusMinusOne";
    case ErrorCode::ThreeNotInvertible: return "ThreeNotInvertible";
    case ErrorCode::NoLongDecomposition: return "NoLongDecomposition";
    case ErrorCode::NoAdjacentLongRoot: return "NoAdjacentLongRoot";
    case ErrorCode::NotOfRootForm: return "NotOfRootForm";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::UndecidableBase: return "UndecidableBase";
    case ErrorCode::NoIsomorphism: return "NoIsomorphism";
    case ErrorCode::NotExact: return "NotExact";
  }
  return "Unknown";
}

}  // namespace g2
