#include "symdec/oracle.hpp"

#include "symdec/error.hpp"
#include "symdec/rearrange.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace symdec {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

void validate(std::span<const Rational> probs, Window window, std::uint64_t budget) {
  if (probs.empty()) throw Error(ErrorCode::kBadMass, "empty probability multiset");
  Rational total = 0;
  for (const auto& p : probs) {
    if (p <= 0) throw Error(ErrorCode::kBadMass, "probability " + to_string(p) + " is not positive");
    total += p;
  }
  if (total != 1)
    throw Error(ErrorCode::kBadMass, "probabilities sum to " + to_string(total) + ", not 1");
  if (window.hi < window.lo || window.width() < probs.size())
    throw Error(ErrorCode::kInvalidArgument, "window [" + std::to_string(window.lo) + ", " +
                                                 std::to_string(window.hi) + "] holds fewer than " +
                                                 std::to_string(probs.size()) + " values");
  const std::uint64_t count = raw_assignment_count(probs.size(), window.width());
  if (count > budget)
    throw Error(ErrorCode::kTooLarge, "enumeration needs " +
                                          (count == kSaturated ? std::string("> 2^64")
                                                               : std::to_string(count)) +
                                          " assignments, budget is " + std::to_string(budget));
}

// Probabilities collapsed to classes of equal value. Permuting class ids with
// next_permutation visits each distinct arrangement exactly once.
struct ProbabilityClasses {
  std::vector<Rational> distinct;   // ascending
  std::vector<std::size_t> ids;     // sorted class id per atom

  explicit ProbabilityClasses(std::span<const Rational> probs) {
    std::vector<Rational> sorted(probs.begin(), probs.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) {
      if (distinct.empty() || distinct.back() != p) distinct.push_back(p);
      ids.push_back(distinct.size() - 1);
    }
  }
};

// Visits (values ascending, class ids in the same order) for every choice of
// n window values and every distinct permutation of the multiset.
template <typename Visit>
void for_each_placement(const ProbabilityClasses& classes, Window window, Visit&& visit) {
  const std::size_t n = classes.ids.size();
  const auto width = static_cast<std::size_t>(window.width());
  std::vector<std::size_t> perm = classes.ids;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  std::vector<std::int64_t> values(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) values[i] = window.lo + static_cast<std::int64_t>(pick[i]);
    do {
      visit(std::span<const std::int64_t>(values), std::span<const std::size_t>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    // next_permutation leaves perm sorted again after the last one.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == width - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

IntDist build(std::span<const std::int64_t> values, std::span<const std::size_t> ids,
              const ProbabilityClasses& classes) {
  std::vector<Atom> atoms;
  atoms.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    atoms.push_back({values[i], classes.distinct[ids[i]]});
  return IntDist::from_atoms(std::move(atoms));
}

struct Placement {
  std::vector<std::int64_t> values;
  std::vector<std::size_t> ids;
};

template <typename Key>
struct ArgminCollector {
  bool any = false;
  Key best{};
  std::vector<Placement> ties;
  std::uint64_t visited = 0;

  void offer(const Key& key, std::span<const std::int64_t> values,
             std::span<const std::size_t> ids) {
    ++visited;
    if (any && best < key) return;
    if (!any || key < best) {
      any = true;
      best = key;
      ties.clear();
    }
    ties.push_back({{values.begin(), values.end()}, {ids.begin(), ids.end()}});
  }
};

// Exact D_f on a common denominator L with 128-bit numerators. Square keys
// are L^2 * Var, Identity keys are L * MAD. Weights hold p_i * L.
struct IntegerKernel {
  std::int64_t denominator = 1;

  static constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 31;
  static constexpr std::int64_t kMaxAbsValue = std::int64_t{1} << 20;

  static bool applicable(std::span<const Rational> probs, Window window, BigInt& lcm) {
    lcm = 1;
    for (const auto& p : probs) {
      lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(p)));
      if (lcm >= kMaxDenominator) return false;
    }
    return window.lo > -kMaxAbsValue && window.hi < kMaxAbsValue;
  }

  __int128 square_key(std::span<const std::int64_t> values,
                      std::span<const std::int64_t> weights) const {
    __int128 first = 0;
    __int128 second = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const __int128 wx = static_cast<__int128>(weights[i]) * values[i];
      first += wx;
      second += wx * values[i];
    }
    return static_cast<__int128>(denominator) * second - first * first;
  }

  __int128 identity_key(std::span<const std::int64_t> values,
                        std::span<const std::int64_t> weights) const {
    __int128 cumulative = 0;
    std::int64_t median = values.back();
    for (std::size_t i = 0; i < values.size(); ++i) {
      cumulative += weights[i];
      if (2 * cumulative >= denominator) {
        median = values[i];
        break;
      }
    }
    __int128 total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::int64_t dev = values[i] >= median ? values[i] - median : median - values[i];
      total += static_cast<__int128>(weights[i]) * dev;
    }
    return total;
  }
};

}  // namespace

Window parse_window(std::string_view text) {
  const auto colon = text.find(':', 1);
  Window w;
  auto parse = [&](std::string_view part, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    return ec == std::errc() && ptr == part.data() + part.size() && !part.empty();
  };
  if (colon == std::string_view::npos || !parse(text.substr(0, colon), w.lo) ||
      !parse(text.substr(colon + 1), w.hi) || w.hi < w.lo)
    throw Error(ErrorCode::kParseError,
                "expected a window \"lo:hi\" with lo <= hi, got \"" + std::string(text) + "\"");
  return w;
}

std::uint64_t raw_assignment_count(std::size_t n, std::uint64_t width) {
  if (n > width) return 0;
  // C(width, n) * n! = width * (width - 1) * ... * (width - n + 1)
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < n; ++i) count = saturating_mul(count, width - i);
  return count;
}

std::uint64_t distinct_assignment_count(std::span<const Rational> probs, std::uint64_t width) {
  std::vector<Rational> sorted(probs.begin(), probs.end());
  std::sort(sorted.begin(), sorted.end());
  // Divide out repeated probabilities one run at a time: choose positions for
  // each run among the remaining slots, so no intermediate exceeds the result.
  std::uint64_t count = 1;
  std::uint64_t slots = width;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const std::uint64_t run = j - i;
    // C(slots, run) computed incrementally stays integral at every step.
    std::uint64_t binom = 1;
    for (std::uint64_t k = 1; k <= run; ++k) {
      if (slots - run + k > 0 && binom > kSaturated / (slots - run + k)) return kSaturated;
      binom = binom * (slots - run + k) / k;
    }
    count = saturating_mul(count, binom);
    slots -= run;
    i = j;
  }
  return count;
}

void enumerate_assignments(std::span<const Rational> probs, Window window,
                           const std::function<void(const IntDist&)>& visit,
                           std::uint64_t budget) {
  validate(probs, window, budget);
  const ProbabilityClasses classes(probs);
  for_each_placement(classes, window,
                     [&](std::span<const std::int64_t> values, std::span<const std::size_t> ids) {
                       visit(build(values, ids, classes));
                     });
}

std::vector<IntDist> enumerate_assignments(std::span<const Rational> probs, Window window,
                                           std::uint64_t budget) {
  std::vector<IntDist> out;
  enumerate_assignments(
      probs, window, [&](const IntDist& d) { out.push_back(d); }, budget);
  return out;
}

OracleReport verify_theorem(std::span<const Rational> probs, Window window,
                            const DispersionFunction& f, std::uint64_t budget) {
  if (!f.is_exact())
    throw Error(ErrorCode::kInvalidArgument,
                "oracle needs an exact dispersion function (identity or square), got " + f.name());
  validate(probs, window, budget);

  OracleReport report;
  const ProbabilityClasses classes(probs);
  std::vector<Placement> ties;
  BigInt lcm;
  if (IntegerKernel::applicable(probs, window, lcm)) {
    IntegerKernel kernel{lcm.convert_to<std::int64_t>()};
    ArgminCollector<__int128> collector;
    std::vector<std::int64_t> class_weight;
    for (const auto& p : classes.distinct)
      class_weight.push_back(Rational(p * kernel.denominator).convert_to<std::int64_t>());
    std::vector<std::int64_t> weights(probs.size());
    const bool square = f.kind() == DispersionFunction::Kind::kSquare;
    for_each_placement(classes, window,
                       [&](std::span<const std::int64_t> values, std::span<const std::size_t> ids) {
                         for (std::size_t i = 0; i < ids.size(); ++i)
                           weights[i] = class_weight[ids[i]];
                         const __int128 key = square ? kernel.square_key(values, weights)
                                                     : kernel.identity_key(values, weights);
                         collector.offer(key, values, ids);
                       });
    // __int128 has no BigInt conversion; split into two 64-bit halves.
    const __int128 key = collector.best;
    const auto high = static_cast<std::int64_t>(key >> 64);
    const auto low = static_cast<std::uint64_t>(key);
    const BigInt numerator = (BigInt(high) << 64) + BigInt(low);
    const BigInt scale = square ? BigInt(lcm * lcm) : lcm;
    report.min_value = Rational(numerator, scale);
    report.num_assignments = collector.visited;
    ties = std::move(collector.ties);
  } else {
    ArgminCollector<Rational> collector;
    for_each_placement(classes, window,
                       [&](std::span<const std::int64_t> values, std::span<const std::size_t> ids) {
                         const IntDist d = build(values, ids, classes);
                         collector.offer(std::get<Rational>(dispersion(d, f).value), values, ids);
                       });
    report.min_value = collector.best;
    report.num_assignments = collector.visited;
    ties = std::move(collector.ties);
  }

  std::vector<Atom> line;
  for (std::size_t i = 0; i < probs.size(); ++i)
    line.push_back({static_cast<std::int64_t>(i), probs[i]});
  const IntDist plus = plus_rearrangement(IntDist::from_atoms(std::move(line)));
  report.plus_form_value = std::get<Rational>(dispersion(plus, f).value);
  report.theorem_holds = report.plus_form_value == report.min_value;
  report.equality_cases_all_equivalent = true;
  for (const auto& t : ties) {
    IntDist d = build(t.values, t.ids, classes);
    report.equality_cases_all_equivalent =
        report.equality_cases_all_equivalent && equivalent_up_to_translation_reflection(d, plus);
    report.minimizers.push_back(std::move(d));
  }
  return report;
}

}  // namespace symdec
