#include "vmrt/error.hpp"

namespace vmrt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParameterRange: return "ParameterRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::BasePointOnBranch: return "BasePointOnBranch";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::NormalizationViolated: return "NormalizationViolated";
    case ErrorKind::ResultantDegenerate: return "ResultantDegenerate";
  }
  return "Unknown";
}

}  // namespace vmrt
