#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symdec {

enum class ErrorCode {
  kParseError,
  kIoError,
  kDuplicateValue,
  kBadMass,
  kInvalidArgument,
  kDegenerateLattice,
  kTooLarge,
  kExactTooLarge,
  kTooManyPatterns,
};

/// Stable machine-readable name, e.g. "DUPLICATE_VALUE".
std::string_view code_name(ErrorCode code);

/// Process exit status for a failure with this code: 1 for validation, 2 for budgets.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symdec
