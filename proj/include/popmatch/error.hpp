#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace popmatch {

enum class ErrorCode {
  AsymmetricAdjacency,
  DuplicatePreference,
  NegativeWeight,
  BadIndex,
  NotAdjacent,
  EdgeNotInGraph,
  OverlappingEdges,
  WitnessDomainMismatch,
  ScaleLimit,
  WeightPatternViolation,
  CNotGreaterThan3,
  ForcedNotAMatching,
  InternalInconsistency,
  FNotMatching,
  FWrongSize,
  COutOfRange,
  KcUndefined,
  AssignmentDomainMismatch,
  VariableGadgetUnresolved,
  ParseError,
};

// Upper-snake name, e.g. "EDGE_NOT_IN_GRAPH".
std::string_view to_string(ErrorCode code);

// All recoverable failures in the library are reported with this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace popmatch
