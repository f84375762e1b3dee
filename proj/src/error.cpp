#include "bihom/error.hpp"

namespace bihom {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NotLie: return "NotLie";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::IrrationalSplit: return "IrrationalSplit";
    case ErrorCode::NotPermuted: return "NotPermuted";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::IrrationalEigenvalues: return "IrrationalEigenvalues";
    case ErrorCode::NotAutomorphismShape: return "NotAutomorphismShape";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::Unmatched: return "Unmatched";
  }
  return "Unknown";
}

}  // namespace bihom
