#include "pedoe/error.hpp"

namespace pedoe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ImproperCircle: return "ImproperCircle";
    case ErrorKind::ImaginaryCircle: return "ImaginaryCircle";
    case ErrorKind::Disjoint: return "Disjoint";
    case ErrorKind::DependentKnowns: return "DependentKnowns";
    case ErrorKind::NoRealSolution: return "NoRealSolution";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

NoRealSolutionError::NoRealSolutionError(const std::string& message, double discriminant)
    : Error(ErrorKind::NoRealSolution, message), discriminant_(discriminant) {}

}  // namespace pedoe
