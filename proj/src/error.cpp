#include "symdec/error.hpp"

namespace symdec {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kDuplicateValue: return "DUPLICATE_VALUE";
    case ErrorCode::kBadMass: return "BAD_MASS";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kDegenerateLattice: return "DEGENERATE_LATTICE";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kExactTooLarge: return "EXACT_TOO_LARGE";
    case ErrorCode::kTooManyPatterns: return "TOO_MANY_PATTERNS";
  }
  return "UNKNOWN";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooLarge:
    case ErrorCode::kExactTooLarge:
    case ErrorCode::kTooManyPatterns:
      return 2;
    default:
      return 1;
  }
}

}  // namespace symdec
