#pragma once

#include <stdexcept>
#include <string>

namespace frobnil {

enum class ErrorCode {
  DivisionByZero,
  GramSingular,
  NotAssociative,
  NotUnital,
  NotSymmetric,
  NotAutomorphism,
  NotGraded,
  LengthMismatch,
  SizeMismatch,
  AlgebraMismatch,
  IndexOutOfRange,
  SizeTooLarge,
  OddTraceParity,
  NonDivisible,
  SyntaxError,
  UnknownSymbol,
  StrandOutOfRange,
  IllegalSymbolForTarget,
  IoError,
  ParseError,
  ValidationFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::GramSingular: return "GramSingular";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::OddTraceParity: return "OddTraceParity";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::StrandOutOfRange: return "StrandOutOfRange";
    case ErrorCode::IllegalSymbolForTarget: return "IllegalSymbolForTarget";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
  }
  return "Error";
}

}  // namespace frobnil
