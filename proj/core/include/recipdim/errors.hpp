// Error taxonomy shared by every layer of the library. Each code matches one
// documented failure mode of the public operations; the CLI maps categories
// to exit codes (parse errors -> 2, unsupported field/shape -> 3).
#pragma once

#include <stdexcept>
#include <string>

namespace recipdim {

enum class ErrorCode {
  // field tower
  DivisionByZero,
  DescriptorMismatch,
  UnsupportedField,
  ReduciblePolynomial,
  NotPrime,
  // polynomial ring
  SyntaxError,
  UnknownVariable,
  ZeroPolynomial,
  VariableClash,
  DegreeZeroInVariable,
  UnsupportedShape,
  CharacteristicTwo,
  WrongDegree,
  // projective geometry
  ConstantPolynomial,
  CommonComponent,
  UnsupportedFactorization,
  PointNotOnVariety,
  ReducibleLeadingForm,
  NotSmooth,
  TooLarge,
  // transform
  ConstantOnVariety,
  UnitFunction,
  NonCoprimeLeadingForms,
  CrossCheckMismatch,
  SingularOnAmbient,
  // dimension criteria
  NonCoprimePair,
  HypothesisUnverified,
  WitnessRejected,
  FiniteField,
  ShapeMismatch,
  GReducible,
  ReducibleInput,
  IdentityFails,
  InternalContradiction,
  // plane localization
  DegreeCharConflict,
  BadDegree,
  // generic
  NotImplemented,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Internal invariant check: used where a violation means a bug in this
// library, never bad user input.
inline void require_internal(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::Internal, message);
}

}  // namespace recipdim
