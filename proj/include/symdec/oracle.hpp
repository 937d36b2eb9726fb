#pragma once

#include "symdec/dispersion.hpp"
#include "symdec/int_dist.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace symdec {

/// Closed integer interval [lo, hi] of admissible support values.
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::uint64_t width() const { return static_cast<std::uint64_t>(hi - lo + 1); }
  friend bool operator==(const Window&, const Window&) = default;
};

/// "lo:hi", e.g. "-1:1".
Window parse_window(std::string_view text);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// C(width, n) * n!, saturating at UINT64_MAX. This is what the budget limits.
std::uint64_t raw_assignment_count(std::size_t n, std::uint64_t width);

/// Number of distinct distributions after collapsing equal probabilities:
/// C(width, n) * n! / prod(multiplicity!). Saturating.
std::uint64_t distinct_assignment_count(std::span<const Rational> probs, std::uint64_t width);

/// Calls visit once for every distinct IntDist that places the probability
/// multiset on n distinct values of the window. Throws Error(kTooLarge) when
/// raw_assignment_count exceeds the budget, Error(kBadMass) for an invalid
/// multiset and Error(kInvalidArgument) when the window is narrower than n.
void enumerate_assignments(std::span<const Rational> probs, Window window,
                           const std::function<void(const IntDist&)>& visit,
                           std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<IntDist> enumerate_assignments(std::span<const Rational> probs, Window window,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

struct OracleReport {
  std::uint64_t num_assignments = 0;
  Rational min_value;
  /// Every distinct assignment attaining min_value, in enumeration order.
  std::vector<IntDist> minimizers;
  Rational plus_form_value;
  /// D_f(X+) equals the minimum over the window.
  bool theorem_holds = false;
  /// Every minimizer is a translate of X+ or of -X+.
  bool equality_cases_all_equivalent = false;
};

/// Exhaustively minimizes D_f over every placement of the multiset in the
/// window and compares the minimum against D_f(X+). f must be Identity or
/// Square; anything else throws Error(kInvalidArgument).
OracleReport verify_theorem(std::span<const Rational> probs, Window window,
                            const DispersionFunction& f,
                            std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace symdec
