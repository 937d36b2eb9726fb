#include "symdec/sums.hpp"

#include "symdec/error.hpp"
#include "symdec/rearrange.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace symdec {

double FloatPmf::total_mass() const {
  long double total = 0.0L;
  for (double m : mass) total += m;
  return static_cast<double>(total);
}

double FloatPmf::mass_drift() const { return std::fabs(total_mass() - 1.0); }

double FloatPmf::at(std::int64_t x) const {
  if (x < offset || x >= offset + static_cast<std::int64_t>(mass.size())) return 0.0;
  return mass[static_cast<std::size_t>(x - offset)];
}

FloatPmf to_float_pmf(const IntDist& d) {
  FloatPmf pmf;
  pmf.offset = d.min_value();
  pmf.mass.assign(static_cast<std::size_t>(d.max_value() - d.min_value() + 1), 0.0);
  for (const auto& a : d.atoms()) pmf.mass[static_cast<std::size_t>(a.x - pmf.offset)] = to_double(a.p);
  return pmf;
}

IntDist convolve(const IntDist& lhs, const IntDist& rhs) {
  std::map<std::int64_t, Rational> sums;
  for (const auto& a : lhs.atoms())
    for (const auto& b : rhs.atoms()) sums[a.x + b.x] += a.p * b.p;
  std::vector<Atom> atoms;
  atoms.reserve(sums.size());
  for (auto& [x, p] : sums) atoms.push_back({x, std::move(p)});
  return IntDist::from_atoms(std::move(atoms));
}

FloatPmf convolve(const FloatPmf& lhs, const FloatPmf& rhs) {
  FloatPmf out;
  out.offset = lhs.offset + rhs.offset;
  out.mass.assign(lhs.mass.size() + rhs.mass.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.mass.size(); ++i) {
    const double li = lhs.mass[i];
    if (li == 0.0) continue;
    double* dst = out.mass.data() + i;
    for (std::size_t j = 0; j < rhs.mass.size(); ++j) dst[j] += li * rhs.mass[j];
  }
  return out;
}

namespace {

template <typename Pmf>
Pmf power_by_squaring(Pmf base, std::uint64_t n) {
  Pmf result = base;
  --n;
  while (n > 0) {
    if (n & 1) result = convolve(result, base);
    n >>= 1;
    if (n > 0) base = convolve(base, base);
  }
  return result;
}

void require_positive(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "number of copies must be positive");
}

}  // namespace

IntDist self_convolve_exact(const IntDist& d, std::uint64_t n, std::uint64_t bit_budget) {
  require_positive(n);
  BigInt lcm = 1;
  for (const auto& a : d.atoms())
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(a.p)));
  const std::uint64_t bits = bit_length(lcm);
  if (bits != 0 && n > bit_budget / bits)
    throw Error(ErrorCode::kExactTooLarge,
                "exact " + std::to_string(n) + "-fold convolution needs about " +
                    std::to_string(bits) + " * " + std::to_string(n) +
                    " denominator bits, budget is " + std::to_string(bit_budget));
  return power_by_squaring(d, n);
}

FloatPmf self_convolve_float(const IntDist& d, std::uint64_t n) {
  require_positive(n);
  return power_by_squaring(to_float_pmf(d), n);
}

ConcentrationReport concentration(const IntDist& d) {
  const Atom* best = &d.atoms().front();
  for (const auto& a : d.atoms())
    if (a.p > best->p) best = &a;
  return {best->x, best->p, true};
}

ConcentrationReport concentration(const FloatPmf& d) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.mass.size(); ++i)
    if (d.mass[i] > d.mass[best]) best = i;
  return {d.offset + static_cast<std::int64_t>(best), d.mass[best], false};
}

namespace {

struct SignSearch {
  std::span<const IntDist> positive;
  std::span<const IntDist> negative;
  std::vector<int> signs;
  std::vector<int> best_signs;
  Rational best_q = -1;
  std::uint64_t visited = 0;

  void run(std::size_t depth, const IntDist& partial) {
    if (depth == positive.size()) {
      ++visited;
      const Rational q = std::get<Rational>(concentration(partial).q_max);
      if (q > best_q) {
        best_q = q;
        best_signs = signs;
      }
      return;
    }
    signs[depth] = -1;
    run(depth + 1, convolve(partial, negative[depth]));
    signs[depth] = 1;
    run(depth + 1, convolve(partial, positive[depth]));
  }
};

}  // namespace

SignSearchReport compare_concentration(std::span<const IntDist> ds, SignMode mode,
                                       std::uint64_t budget) {
  if (ds.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one distribution");
  if (mode == SignMode::kSearch && (ds.size() >= 64 || (std::uint64_t{1} << ds.size()) > budget))
    throw Error(ErrorCode::kTooManyPatterns,
                "sign search over " + std::to_string(ds.size()) +
                    " variables exceeds the pattern budget " + std::to_string(budget));

  IntDist sum = ds.front();
  for (std::size_t i = 1; i < ds.size(); ++i) sum = convolve(sum, ds[i]);

  std::vector<IntDist> plus;
  std::vector<IntDist> minus;
  for (const auto& d : ds) {
    plus.push_back(plus_rearrangement(d));
    minus.push_back(reflect(plus.back()));
  }
  IntDist all_plus = plus.front();
  for (std::size_t i = 1; i < plus.size(); ++i) all_plus = convolve(all_plus, plus[i]);

  SignSearchReport report;
  report.lhs_q = std::get<Rational>(concentration(sum).q_max);
  report.rhs_q_all_plus = std::get<Rational>(concentration(all_plus).q_max);
  if (mode == SignMode::kAllPlus) {
    report.best_signs.assign(ds.size(), 1);
    report.rhs_q_best = report.rhs_q_all_plus;
    report.patterns_searched = 1;
  } else {
    SignSearch search{plus, minus, std::vector<int>(ds.size(), 0), {}, Rational(-1), 0};
    search.run(0, IntDist::point(0));
    report.best_signs = std::move(search.best_signs);
    report.rhs_q_best = search.best_q;
    report.patterns_searched = search.visited;
  }
  report.inequality_holds = report.lhs_q <= report.rhs_q_best;
  return report;
}

LltScanRow llt_ratio(const IntDist& d, std::uint64_t n) {
  require_positive(n);
  if (lattice_span(d) != 1)
    throw Error(ErrorCode::kDegenerateLattice,
                "lattice span is " + std::to_string(lattice_span(d)) +
                    "; the local limit theorem needs span 1");
  const double var = to_double(variance(d));
  const FloatPmf sum = self_convolve_float(d, n);
  const double q = std::get<double>(concentration(sum).q_max);
  return {n, q, q * std::sqrt(2.0 * std::numbers::pi * static_cast<double>(n) * var)};
}

std::vector<LltScanRow> llt_scan(const IntDist& d, std::span<const std::uint64_t> ns) {
  std::vector<LltScanRow> rows;
  rows.reserve(ns.size());
  for (std::uint64_t n : ns) rows.push_back(llt_ratio(d, n));
  return rows;
}

}  // namespace symdec
