#pragma once

#include <stdexcept>
#include <string>

namespace latfam {

// Error taxonomy shared by all modules. The CLI maps IoError to exit code 2
// and everything else to exit code 1.
enum class Errc {
  EmptyInput,
  Overflow,
  InvalidShoeParameters,
  NoAdjoint,
  DegeneratePolygon,
  NonPrimitiveDirection,
  DegenerateEmbedding,
  ZeroSample,
  ZeroScale,
  BasisMismatch,
  NotMprs,
  AlreadyMinimal,
  NonBasisContractionNeeded,
  MinimalityUndecidable,
  UnrecognizedMinimalModel,
  OracleMismatch,
  IoError,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidShoeParameters: return "InvalidShoeParameters";
    case Errc::NoAdjoint: return "NoAdjoint";
    case Errc::DegeneratePolygon: return "DegeneratePolygon";
    case Errc::NonPrimitiveDirection: return "NonPrimitiveDirection";
    case Errc::DegenerateEmbedding: return "DegenerateEmbedding";
    case Errc::ZeroSample: return "ZeroSample";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::NotMprs: return "NotMprs";
    case Errc::AlreadyMinimal: return "AlreadyMinimal";
    case Errc::NonBasisContractionNeeded: return "NonBasisContractionNeeded";
    case Errc::MinimalityUndecidable: return "MinimalityUndecidable";
    case Errc::UnrecognizedMinimalModel: return "UnrecognizedMinimalModel";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  Errc code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  Errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace latfam
