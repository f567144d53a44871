#include "swingcmp/error.hpp"

namespace swingcmp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedFile: return "MALFORMED_FILE";
    case ErrorCode::SchemaMismatch: return "SCHEMA_MISMATCH";
    case ErrorCode::NonFiniteValue: return "NON_FINITE_VALUE";
    case ErrorCode::RaggedRows: return "RAGGED_ROWS";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::DegeneratePose: return "DEGENERATE_POSE";
    case ErrorCode::EmptyMatrix: return "EMPTY_MATRIX";
    case ErrorCode::PathShapeMismatch: return "PATH_SHAPE_MISMATCH";
    case ErrorCode::EmptySignal: return "EMPTY_SIGNAL";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::TooFewSamples: return "TOO_FEW_SAMPLES";
    case ErrorCode::InvalidParams: return "INVALID_PARAMS";
    case ErrorCode::InvalidWarp: return "INVALID_WARP";
    case ErrorCode::IoFailure: return "IO_FAILURE";
    case ErrorCode::SchemaVersionMismatch: return "SCHEMA_VERSION_MISMATCH";
    case ErrorCode::BadRequest: return "BAD_REQUEST";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::PortInUse: return "PORT_IN_USE";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoFailure:
    case ErrorCode::PortInUse:
      return 3;
    case ErrorCode::Internal:
      return 4;
    default:
      return 2;
  }
}

}  // namespace swingcmp
