#include "symdec/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace symdec {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

std::vector<Rational> random_probabilities(std::mt19937_64& rng, const RandomDistConfig& config) {
  const std::size_t n = 1 + uniform_below(rng, config.max_atoms);
  std::vector<std::uint64_t> weights(n);
  for (auto& w : weights) w = 1 + uniform_below(rng, config.max_weight);
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  std::vector<Rational> probs;
  probs.reserve(n);
  for (auto w : weights) probs.emplace_back(BigInt(w), BigInt(total));
  return probs;
}

IntDist random_distribution(std::mt19937_64& rng, const RandomDistConfig& config) {
  const auto probs = random_probabilities(rng, config);
  // Partial Fisher-Yates over the value range picks distinct support points.
  std::vector<std::int64_t> pool;
  for (std::int64_t x = -config.value_bound; x <= config.value_bound; ++x) pool.push_back(x);
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    atoms.push_back({pool[i], probs[i]});
  }
  return IntDist::from_atoms(std::move(atoms));
}

}  // namespace symdec
