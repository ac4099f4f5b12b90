#include "framekit/errors.hpp"

namespace framekit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::ZeroSubspace: return "ZeroSubspace";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::WrongFrameKind: return "WrongFrameKind";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidFile: return "InvalidFile";
  }
  return "Unknown";
}

}  // namespace framekit
