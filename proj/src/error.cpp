#include "design_forge/error.hpp"

namespace design_forge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedM: return "UnsupportedM";
    case ErrorKind::NonPrimitivePolynomial: return "NonPrimitivePolynomial";
    case ErrorKind::NotInSubfield: return "NotInSubfield";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InvalidDelta: return "InvalidDelta";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::CoefficientNotInSubfield: return "CoefficientNotInSubfield";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InapplicableParameters: return "InapplicableParameters";
    case ErrorKind::NonIntegerCount: return "NonIntegerCount";
    case ErrorKind::WeightCollision: return "WeightCollision";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::OddSum: return "OddSum";
    case ErrorKind::EmptyWeightClass: return "EmptyWeightClass";
    case ErrorKind::TrivialDesign: return "TrivialDesign";
    case ErrorKind::NonIntegerLambda: return "NonIntegerLambda";
  }
  return "Unknown";
}

bool is_parameter_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegerCount:
    case ErrorKind::NonIntegerLambda:
    case ErrorKind::WeightCollision:
      return false;
    default:
      return true;
  }
}

}  // namespace design_forge
