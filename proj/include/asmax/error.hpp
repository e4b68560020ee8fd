#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asmax {

enum class Errc {
  NonPrimeP0,
  DegreeTooLarge,
  NotADivisor,
  ZeroInput,
  EvenCharacteristic,
  FieldMismatch,
  FieldTooLarge,
  OddF0,
  MixedP0,
  ZeroPolynomial,
  DegreeZero,
  BoundExceeded,
  NotFpStable,
  StepMismatch,
  DivisionByZero,
  NotInKernel,
  NoFrobeniusStableLagrangian,
  ZeroConstantTerm,
  NonzeroRemainder,
  SingularTraceSystem,
  HypothesisViolated,
  FormulaPathUnavailable,
  SubfieldViolation,
  NotDividing,
  BadCongruence,
  BadAlpha,
  TooLarge,
  Mismatch,
  UnknownTheorem,
  BudgetExceeded,
  InvalidSpec,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace asmax
