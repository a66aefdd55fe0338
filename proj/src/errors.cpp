#include "ccc/errors.hpp"

namespace ccc {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::malformed_code: return "MalformedCode";
    case ErrorKind::invalid_diagram: return "InvalidDiagram";
    case ErrorKind::non_realizable: return "NonRealizable";
    case ErrorKind::disconnected_diagram: return "DisconnectedDiagram";
    case ErrorKind::internal_inconsistency: return "InternalInconsistency";
    case ErrorKind::not_applicable: return "NotApplicable";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::singular: return "Singular";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::empty_matrix: return "EmptyMatrix";
    case ErrorKind::not_definite: return "NotDefinite";
    case ErrorKind::precondition_violation: return "PreconditionViolation";
  }
  return "Error";
}

void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace ccc
