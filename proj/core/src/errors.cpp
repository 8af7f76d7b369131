#include "recipdim/errors.hpp"

namespace recipdim {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::VariableClash: return "VariableClash";
    case ErrorCode::DegreeZeroInVariable: return "DegreeZeroInVariable";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::CommonComponent: return "CommonComponent";
    case ErrorCode::UnsupportedFactorization: return "UnsupportedFactorization";
    case ErrorCode::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorCode::ReducibleLeadingForm: return "ReducibleLeadingForm";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConstantOnVariety: return "ConstantOnVariety";
    case ErrorCode::UnitFunction: return "UnitFunction";
    case ErrorCode::NonCoprimeLeadingForms: return "NonCoprimeLeadingForms";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::SingularOnAmbient: return "SingularOnAmbient";
    case ErrorCode::NonCoprimePair: return "NonCoprimePair";
    case ErrorCode::HypothesisUnverified: return "HypothesisUnverified";
    case ErrorCode::WitnessRejected: return "WitnessRejected";
    case ErrorCode::FiniteField: return "FiniteField";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::GReducible: return "GReducible";
    case ErrorCode::ReducibleInput: return "ReducibleInput";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::DegreeCharConflict: return "DegreeCharConflict";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::NotImplemented: return "NotImplemented";
    case ErrorCode::Internal: return "Internal";
  }
  return "UnknownError";
}

}  // namespace recipdim
