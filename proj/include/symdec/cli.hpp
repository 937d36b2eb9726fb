#pragma once

#include "symdec/oracle.hpp"
#include "symdec/sums.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symdec {

enum class Subcommand {
  kRearrange,
  kDispersion,
  kCheck,
  kProofChain,
  kOracle,
  kConvolve,
  kConcentration,
  kCompare,
  kLltScan,
  kSweep,
};

struct Budgets {
  std::uint64_t enumeration = kDefaultEnumerationBudget;
  std::uint64_t sign_patterns = kDefaultSignPatternBudget;
  std::uint64_t exact_bits = kDefaultExactBitBudget;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::kRearrange;
  std::string input_path;
  /// Second operand for `convolve`.
  std::string with_path;
  /// Empty means the output stream passed to run().
  std::string output_path;
  std::string f_name = "square";
  std::uint64_t seed = 42;
  std::uint64_t count = 100;
  std::string probs;
  std::string window;
  /// Number of i.i.d. copies for convolve/concentration/compare.
  std::uint64_t copies = 1;
  std::string signs = "search";
  std::string mode = "exact";
  std::vector<std::uint64_t> ns;
  std::optional<std::string> a;
  Budgets budgets;
};

/// Dispatches one subcommand. Reports go to `out` (or output_path) as JSON,
/// scans as CSV. Failures print {"error": CODE, "message": ...} to `err` and
/// return 1 for validation errors, 2 for budget errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and calls run().
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdec
