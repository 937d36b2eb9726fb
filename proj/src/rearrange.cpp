#include "symdec/rearrange.hpp"

#include <algorithm>

namespace symdec {

std::vector<Atom> rank_atoms(const IntDist& d) {
  std::vector<Atom> ranked(d.atoms().begin(), d.atoms().end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const Atom& a, const Atom& b) {
    if (a.p != b.p) return a.p > b.p;
    return a.x < b.x;
  });
  return ranked;
}

IntDist plus_rearrangement(const IntDist& d) {
  const auto probs = sorted_probabilities(d);
  std::vector<Atom> placed;
  placed.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) placed.push_back({plus_position(i), probs[i]});
  return IntDist::from_atoms(std::move(placed));
}

bool is_plus_form(const IntDist& d) { return plus_rearrangement(d) == d; }

}  // namespace symdec
