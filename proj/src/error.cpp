#include "foxcoh/error.hpp"

namespace foxcoh {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::UnknownGenerator: return "UNKNOWN_GENERATOR";
    case ErrorCode::NonConstantExpression: return "NON_CONSTANT_EXPRESSION";
    case ErrorCode::NotInGroup: return "NOT_IN_GROUP";
    case ErrorCode::NotARepresentation: return "NOT_A_REPRESENTATION";
    case ErrorCode::NoInvariantForm: return "NO_INVARIANT_FORM";
    case ErrorCode::AmbiguousForm: return "AMBIGUOUS_FORM";
    case ErrorCode::DegenerateForm: return "DEGENERATE_FORM";
    case ErrorCode::NonHermitian: return "NON_HERMITIAN";
    case ErrorCode::SubspaceNotPreserved: return "SUBSPACE_NOT_PRESERVED";
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::CheckFailed: return "CHECK_FAILED";
  }
  return "UNKNOWN";
}

}  // namespace foxcoh
