#include "rbw/common.hpp"

#include <cstdlib>

namespace rbw {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NonClosed: return "NonClosed";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InconsistentExpectations: return "InconsistentExpectations";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NonOrthonormalBasis: return "NonOrthonormalBasis";
    case ErrorKind::MalformedPipeline: return "MalformedPipeline";
    case ErrorKind::SuperluminalVelocity: return "SuperluminalVelocity";
    case ErrorKind::MixedFrames: return "MixedFrames";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::MNotCentral: return "MNotCentral";
    case ErrorKind::IllDefinedContraction: return "IllDefinedContraction";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool Error::is_numerical() const noexcept {
  switch (kind_) {
    case ErrorKind::InconsistentExpectations:
    case ErrorKind::NotHermitian:
    case ErrorKind::NotUnitary:
    case ErrorKind::NonOrthonormalBasis:
    case ErrorKind::MNotCentral:
    case ErrorKind::IllDefinedContraction:
      return true;
    default:
      return false;
  }
}

double default_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("RBW_TOLERANCE")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && *end == '\0' && v > 0.0) return v;
    }
    return 1e-10;
  }();
  return tol;
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace rbw
