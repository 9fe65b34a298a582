#include "golden_bounds/error.hpp"

namespace golden_bounds {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::CondError: return "CondError";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace golden_bounds
