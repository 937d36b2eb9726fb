#pragma once

#include "symdec/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace symdec {

struct Atom {
  std::int64_t x = 0;
  Rational p;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A probability mass function on finitely many integers with exact rational
/// weights. Atoms are sorted by value, values are distinct, every weight is
/// strictly positive and the weights sum to exactly one.
class IntDist {
 public:
  /// Validates and sorts. Throws Error(kDuplicateValue) or Error(kBadMass).
  static IntDist from_atoms(std::vector<Atom> atoms);

  /// Point mass at x.
  static IntDist point(std::int64_t x);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  std::int64_t min_value() const noexcept { return atoms_.front().x; }
  std::int64_t max_value() const noexcept { return atoms_.back().x; }

  /// P(X = x); zero off the support.
  Rational prob(std::int64_t x) const;

  friend bool operator==(const IntDist&, const IntDist&) = default;

 private:
  explicit IntDist(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  // Only for operations that provably preserve the invariants.
  friend IntDist translate(const IntDist&, std::int64_t);
  friend IntDist reflect(const IntDist&);

  std::vector<Atom> atoms_;
};

/// Closed interval [lo, hi] of medians.
struct MedianInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& a) const { return lo <= a && a <= hi; }
  friend bool operator==(const MedianInterval&, const MedianInterval&) = default;
};

inline IntDist make_dist(std::vector<Atom> atoms) { return IntDist::from_atoms(std::move(atoms)); }

IntDist translate(const IntDist& d, std::int64_t k);
IntDist reflect(const IntDist& d);

/// Translate so the minimum support value is 0, then keep whichever of the
/// shifted original and shifted reflection is lexicographically smaller as a
/// (value, prob) sequence.
IntDist canonical_form(const IntDist& d);

/// True iff d2 = d1 + k or d2 = -d1 + k for some integer k.
bool equivalent_up_to_translation_reflection(const IntDist& d1, const IntDist& d2);

Rational mean(const IntDist& d);
Rational variance(const IntDist& d);
MedianInterval median_set(const IntDist& d);

/// E|X - m| for any median m.
Rational mad_median(const IntDist& d);

/// gcd of the support differences; 0 for a point mass.
std::uint64_t lattice_span(const IntDist& d);

/// Probabilities ordered non-increasingly.
std::vector<Rational> sorted_probabilities(const IntDist& d);

/// Three-way comparison of (value, prob) sequences.
int lexicographic_compare(const IntDist& a, const IntDist& b);

}  // namespace symdec
