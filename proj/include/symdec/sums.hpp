#pragma once

#include "symdec/dispersion.hpp"
#include "symdec/int_dist.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace symdec {

/// Dense double-precision PMF on the contiguous window
/// [offset, offset + mass.size() - 1]. Zeros inside the window are kept.
struct FloatPmf {
  std::int64_t offset = 0;
  std::vector<double> mass;

  double total_mass() const;
  /// |total_mass() - 1|.
  double mass_drift() const;
  double at(std::int64_t x) const;
};

FloatPmf to_float_pmf(const IntDist& d);

/// Exact PMF of the sum of independent copies: P(z) = sum_k P1(k) P2(z - k).
IntDist convolve(const IntDist& lhs, const IntDist& rhs);
FloatPmf convolve(const FloatPmf& lhs, const FloatPmf& rhs);

inline constexpr std::uint64_t kDefaultExactBitBudget = 65536;

/// n-fold convolution by repeated squaring. Throws Error(kExactTooLarge) when
/// n times the bit size of the common denominator exceeds bit_budget, and
/// Error(kInvalidArgument) for n == 0.
IntDist self_convolve_exact(const IntDist& d, std::uint64_t n,
                            std::uint64_t bit_budget = kDefaultExactBitBudget);
FloatPmf self_convolve_float(const IntDist& d, std::uint64_t n);

struct ConcentrationReport {
  std::int64_t argmax_x = 0;
  Number q_max;
  bool exact = true;
};

/// max_x P(X = x) with the smallest attaining x.
ConcentrationReport concentration(const IntDist& d);
ConcentrationReport concentration(const FloatPmf& d);

enum class SignMode { kSearch, kAllPlus };

inline constexpr std::uint64_t kDefaultSignPatternBudget = std::uint64_t{1} << 16;

struct SignSearchReport {
  Rational lhs_q;
  std::vector<int> best_signs;
  Rational rhs_q_best;
  Rational rhs_q_all_plus;
  std::uint64_t patterns_searched = 0;
  /// lhs_q <= rhs_q_best. Reported, never enforced.
  bool inequality_holds = false;
};

/// Compares Q(X_1 + ... + X_n) with max over signs a of Q(a_1 X_1+ + ... + a_n X_n+).
/// Ties go to the lexicographically smallest sign vector (-1 before +1).
/// Throws Error(kTooManyPatterns) when a search needs more than budget patterns.
SignSearchReport compare_concentration(std::span<const IntDist> ds,
                                       SignMode mode = SignMode::kSearch,
                                       std::uint64_t budget = kDefaultSignPatternBudget);

struct LltScanRow {
  std::uint64_t n = 0;
  double q_n = 0.0;
  /// q_n * sqrt(2 pi n Var X); tends to 1 for an aperiodic lattice distribution.
  double ratio = 0.0;
};

/// Throws Error(kDegenerateLattice) unless lattice_span(d) == 1.
LltScanRow llt_ratio(const IntDist& d, std::uint64_t n);
std::vector<LltScanRow> llt_scan(const IntDist& d, std::span<const std::uint64_t> ns);

}  // namespace symdec
