#include "dpp/error.hpp"

namespace dpp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::NotSquare: return "NotSquare";
  case ErrorCode::NonFinite: return "NonFinite";
  case ErrorCode::NotHermitian: return "NotHermitian";
  case ErrorCode::SpectrumOutOfRange: return "SpectrumOutOfRange";
  case ErrorCode::DecompositionFailure: return "DecompositionFailure";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::EmptySubset: return "EmptySubset";
  case ErrorCode::InvalidSubset: return "InvalidSubset";
  case ErrorCode::NotUnitary: return "NotUnitary";
  case ErrorCode::NotStrictContraction: return "NotStrictContraction";
  case ErrorCode::NotPSD: return "NotPSD";
  case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::NumericalInconsistency: return "NumericalInconsistency";
  case ErrorCode::BlocksNotDisjoint: return "BlocksNotDisjoint";
  case ErrorCode::TooManyFactors: return "TooManyFactors";
  case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
  case ErrorCode::OutOfRange: return "OutOfRange";
  case ErrorCode::Disconnected: return "Disconnected";
  case ErrorCode::InvalidGraph: return "InvalidGraph";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

} // namespace dpp
