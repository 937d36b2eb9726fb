#pragma once

#include "symdec/int_dist.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace symdec {

/// Bounds for random test distributions: N atoms in [1, max_atoms], distinct
/// values in [-value_bound, value_bound], integer weights in [1, max_weight].
struct RandomDistConfig {
  std::size_t max_atoms = 6;
  std::int64_t value_bound = 6;
  std::uint64_t max_weight = 64;
};

/// Uniform integer in [0, bound) by rejection, so the stream depends only on
/// the 64-bit engine and not on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Normalized multiset of 1..max_atoms probabilities with weights <= max_weight.
std::vector<Rational> random_probabilities(std::mt19937_64& rng, const RandomDistConfig& config = {});

IntDist random_distribution(std::mt19937_64& rng, const RandomDistConfig& config = {});

}  // namespace symdec
