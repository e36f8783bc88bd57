#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace design_forge {

enum class ErrorKind {
  UnsupportedM,
  NonPrimitivePolynomial,
  NotInSubfield,
  IndexOutOfRange,
  EmptyInput,
  ZeroPolynomial,
  InvalidDelta,
  InvalidParameters,
  CoefficientNotInSubfield,
  LengthMismatch,
  TooLarge,
  InapplicableParameters,
  NonIntegerCount,
  WeightCollision,
  ZeroForm,
  OddSum,
  EmptyWeightClass,
  TrivialDesign,
  NonIntegerLambda,
};

std::string_view to_string(ErrorKind kind);

// True for kinds that describe bad caller input rather than a failed check.
bool is_parameter_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace design_forge
