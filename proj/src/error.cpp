#include "popmatch/error.hpp"

namespace popmatch {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricAdjacency: return "ASYMMETRIC_ADJACENCY";
    case ErrorCode::DuplicatePreference: return "DUPLICATE_PREFERENCE";
    case ErrorCode::NegativeWeight: return "NEGATIVE_WEIGHT";
    case ErrorCode::BadIndex: return "BAD_INDEX";
    case ErrorCode::NotAdjacent: return "NOT_ADJACENT";
    case ErrorCode::EdgeNotInGraph: return "EDGE_NOT_IN_GRAPH";
    case ErrorCode::OverlappingEdges: return "OVERLAPPING_EDGES";
    case ErrorCode::WitnessDomainMismatch: return "WITNESS_DOMAIN_MISMATCH";
    case ErrorCode::ScaleLimit: return "SCALE_LIMIT";
    case ErrorCode::WeightPatternViolation: return "WEIGHT_PATTERN_VIOLATION";
    case ErrorCode::CNotGreaterThan3: return "C_NOT_GREATER_THAN_3";
    case ErrorCode::ForcedNotAMatching: return "FORCED_NOT_A_MATCHING";
    case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::FNotMatching: return "F_NOT_MATCHING";
    case ErrorCode::FWrongSize: return "F_WRONG_SIZE";
    case ErrorCode::COutOfRange: return "C_OUT_OF_RANGE";
    case ErrorCode::KcUndefined: return "K_C_UNDEFINED";
    case ErrorCode::AssignmentDomainMismatch: return "ASSIGNMENT_DOMAIN_MISMATCH";
    case ErrorCode::VariableGadgetUnresolved: return "VARIABLE_GADGET_UNRESOLVED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace popmatch
