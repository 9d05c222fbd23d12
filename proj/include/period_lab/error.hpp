#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plab {

enum class Errc {
  CompositeCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  ZeroElement,
  MixedContexts,
  ConstantPolynomial,
  ZeroPolynomial,
  ReduciblePolynomial,
  XDividesG,
  LimitExceeded,
  LengthMismatch,
  CapExceeded,
  InsufficientPrefix,
  DegreeOutOfRange,
  NotPrimePower,
  BudgetExceeded,
  Overflow,
  OutOfRange,
  NonUnitC0,
  IndexOutOfRange,
  ParseError,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::MixedContexts: return "MixedContexts";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::XDividesG: return "XDividesG";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InsufficientPrefix: return "InsufficientPrefix";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Overflow: return "Overflow";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NonUnitC0: return "NonUnitC0";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace plab
