#include "asmax/error.hpp"

namespace asmax {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeP0: return "NonPrimeP0";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::OddF0: return "OddF0";
    case Errc::MixedP0: return "MixedP0";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotFpStable: return "NotFpStable";
    case Errc::StepMismatch: return "StepMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::NoFrobeniusStableLagrangian: return "NoFrobeniusStableLagrangian";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NonzeroRemainder: return "NonzeroRemainder";
    case Errc::SingularTraceSystem: return "SingularTraceSystem";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::FormulaPathUnavailable: return "FormulaPathUnavailable";
    case Errc::SubfieldViolation: return "SubfieldViolation";
    case Errc::NotDividing: return "NotDividing";
    case Errc::BadCongruence: return "BadCongruence";
    case Errc::BadAlpha: return "BadAlpha";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Mismatch: return "Mismatch";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

}  // namespace asmax
