#include "symdec/int_dist.hpp"

#include "symdec/error.hpp"

#include <algorithm>
#include <numeric>

namespace symdec {

IntDist IntDist::from_atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw Error(ErrorCode::kBadMass, "distribution has no atoms");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.x < b.x; });
  Rational total = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0 && atoms[i].x == atoms[i - 1].x)
      throw Error(ErrorCode::kDuplicateValue,
                  "value " + std::to_string(atoms[i].x) + " appears more than once");
    if (atoms[i].p <= 0)
      throw Error(ErrorCode::kBadMass, "probability at " + std::to_string(atoms[i].x) +
                                           " is not positive: " + to_string(atoms[i].p));
    total += atoms[i].p;
  }
  if (total != 1)
    throw Error(ErrorCode::kBadMass, "probabilities sum to " + to_string(total) + ", not 1");
  return IntDist(std::move(atoms));
}

IntDist IntDist::point(std::int64_t x) { return IntDist({Atom{x, Rational(1)}}); }

Rational IntDist::prob(std::int64_t x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, std::int64_t v) { return a.x < v; });
  if (it == atoms_.end() || it->x != x) return Rational(0);
  return it->p;
}

IntDist translate(const IntDist& d, std::int64_t k) {
  std::vector<Atom> atoms(d.atoms().begin(), d.atoms().end());
  for (auto& a : atoms) a.x += k;
  return IntDist(std::move(atoms));
}

IntDist reflect(const IntDist& d) {
  std::vector<Atom> atoms(d.atoms().rbegin(), d.atoms().rend());
  for (auto& a : atoms) a.x = -a.x;
  return IntDist(std::move(atoms));
}

int lexicographic_compare(const IntDist& a, const IntDist& b) {
  const auto lhs = a.atoms();
  const auto rhs = b.atoms();
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs[i].x != rhs[i].x) return lhs[i].x < rhs[i].x ? -1 : 1;
    if (lhs[i].p != rhs[i].p) return lhs[i].p < rhs[i].p ? -1 : 1;
  }
  if (lhs.size() == rhs.size()) return 0;
  return lhs.size() < rhs.size() ? -1 : 1;
}

IntDist canonical_form(const IntDist& d) {
  IntDist shifted = translate(d, -d.min_value());
  const IntDist mirrored = reflect(d);
  IntDist shifted_mirror = translate(mirrored, -mirrored.min_value());
  return lexicographic_compare(shifted_mirror, shifted) < 0 ? shifted_mirror : shifted;
}

bool equivalent_up_to_translation_reflection(const IntDist& d1, const IntDist& d2) {
  if (d1.size() != d2.size()) return false;
  return canonical_form(d1) == canonical_form(d2);
}

Rational mean(const IntDist& d) {
  Rational m = 0;
  for (const auto& a : d.atoms()) m += a.p * a.x;
  return m;
}

Rational variance(const IntDist& d) {
  Rational first = 0;
  Rational second = 0;
  for (const auto& a : d.atoms()) {
    const Rational x(a.x);
    first += a.p * x;
    second += a.p * x * x;
  }
  return second - first * first;
}

MedianInterval median_set(const IntDist& d) {
  const auto atoms = d.atoms();
  const Rational half = make_rational(1, 2);
  Rational cdf = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    cdf += atoms[i].p;
    if (cdf < half) continue;
    // P(X >= x_{i+1}) = 1 - F(x_i) = 1/2 exactly: the whole gap is median.
    if (cdf == half) return {Rational(atoms[i].x), Rational(atoms[i + 1].x)};
    return {Rational(atoms[i].x), Rational(atoms[i].x)};
  }
  // Unreachable for a valid IntDist: the CDF reaches 1.
  return {Rational(atoms.back().x), Rational(atoms.back().x)};
}

Rational mad_median(const IntDist& d) {
  const Rational m = median_set(d).lo;
  Rational total = 0;
  for (const auto& a : d.atoms()) total += a.p * boost::multiprecision::abs(Rational(a.x) - m);
  return total;
}

std::uint64_t lattice_span(const IntDist& d) {
  std::uint64_t g = 0;
  const std::int64_t base = d.min_value();
  for (const auto& a : d.atoms())
    g = std::gcd(g, static_cast<std::uint64_t>(a.x - base));
  return g;
}

std::vector<Rational> sorted_probabilities(const IntDist& d) {
  std::vector<Rational> probs;
  probs.reserve(d.size());
  for (const auto& a : d.atoms()) probs.push_back(a.p);
  std::sort(probs.begin(), probs.end(), std::greater<>());
  return probs;
}

}  // namespace symdec
