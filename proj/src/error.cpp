#include "qframes/error.hpp"

namespace qframes {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::MultiplicityAnomaly: return "MultiplicityAnomaly";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::NotRieszBasis: return "NotRieszBasis";
    case ErrorKind::DualMismatch: return "DualMismatch";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::LowerBoundZero: return "LowerBoundZero";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::GenerationFailure: return "GenerationFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qframes
