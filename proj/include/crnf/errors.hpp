#pragma once

#include <stdexcept>
#include <string>

namespace crnf {

enum class ErrorCode {
  DegreeViolation,
  NotTangentToIdentity,
  NotHomogeneous,
  ZeroModel,
  ModelInvalid,
  InadmissibleMonomial,
  DegreeSystemInconsistent,
  DegreeSystemUnderdetermined,
  ResonanceNonAffine,
  ResonanceSingular,
  LowerDegreeDisturbed,
  NondegeneracyViolated,
  OrderMismatch,
  ZeroPolynomial,
  ParseError,
  PreconditionViolated,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::NotTangentToIdentity: return "NotTangentToIdentity";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroModel: return "ZeroModel";
    case ErrorCode::ModelInvalid: return "ModelInvalid";
    case ErrorCode::InadmissibleMonomial: return "InadmissibleMonomial";
    case ErrorCode::DegreeSystemInconsistent: return "DegreeSystemInconsistent";
    case ErrorCode::DegreeSystemUnderdetermined: return "DegreeSystemUnderdetermined";
    case ErrorCode::ResonanceNonAffine: return "ResonanceNonAffine";
    case ErrorCode::ResonanceSingular: return "ResonanceSingular";
    case ErrorCode::LowerDegreeDisturbed: return "LowerDegreeDisturbed";
    case ErrorCode::NondegeneracyViolated: return "NondegeneracyViolated";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace crnf
