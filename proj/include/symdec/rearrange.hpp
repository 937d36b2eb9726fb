#pragma once

#include "symdec/int_dist.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symdec {

/// Atoms ordered by (probability descending, value ascending). This is the
/// deterministic order used to pair probabilities with positions.
std::vector<Atom> rank_atoms(const IntDist& d);

/// Position of the atom with the given 0-based rank in the plus form:
/// 0, 1, -1, 2, -2, ...
constexpr std::int64_t plus_position(std::size_t rank) {
  const auto r = static_cast<std::int64_t>(rank);
  return (r % 2 == 1) ? (r + 1) / 2 : -(r / 2);
}

/// The integer symmetric-decreasing rearrangement X+: the largest probability
/// goes to 0, then 1, -1, 2, -2, ... in non-increasing order of probability.
IntDist plus_rearrangement(const IntDist& d);

bool is_plus_form(const IntDist& d);

}  // namespace symdec
