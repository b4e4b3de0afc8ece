#pragma once

#include <stdexcept>
#include <string>

namespace odeq {

enum class ErrorKind {
  SyntaxError,
  DegenerateEquation,
  NotSquarefree,
  ProbablyReducible,
  NonInvertibleDenominator,
  UnsupportedLocalForm,
  UnsupportedBranchLocus,
  NotHyperellipticSupported,
  GenusTooSmall,
  NoRationalPoint,
  NotAGenerator,
  NonRationalSupport,
  UnsupportedSmallSupport,
  DegenerateTuple,
  NotASquareCompatible,
  NotAbsolutelyIrreducible,
  Unsupported,
  ResourceLimit,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DegenerateEquation: return "DegenerateEquation";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::ProbablyReducible: return "ProbablyReducible";
    case ErrorKind::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorKind::UnsupportedLocalForm: return "UnsupportedLocalForm";
    case ErrorKind::UnsupportedBranchLocus: return "UnsupportedBranchLocus";
    case ErrorKind::NotHyperellipticSupported: return "NotHyperellipticSupported";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::NoRationalPoint: return "NoRationalPoint";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::NonRationalSupport: return "NonRationalSupport";
    case ErrorKind::UnsupportedSmallSupport: return "UnsupportedSmallSupport";
    case ErrorKind::DegenerateTuple: return "DegenerateTuple";
    case ErrorKind::NotASquareCompatible: return "NotASquareCompatible";
    case ErrorKind::NotAbsolutelyIrreducible: return "NotAbsolutelyIrreducible";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace odeq
