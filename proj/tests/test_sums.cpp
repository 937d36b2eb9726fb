#include "doctest.h"

#include "symdec/error.hpp"
#include "symdec/rearrange.hpp"
#include "symdec/sums.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace symdec;
using symdec::testing::dist;
using symdec::testing::q;

namespace {

Rational exact_q(const IntDist& d) { return std::get<Rational>(concentration(d).q_max); }

ErrorCode error_code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("convolve examples") {
  const IntDist coin = dist({{0, q(1, 2)}, {1, q(1, 2)}});
  const IntDist two = dist({{0, q(1, 4)}, {1, q(1, 2)}, {2, q(1, 4)}});
  CHECK(convolve(coin, coin) == two);
  CHECK(convolve(two, IntDist::point(4)) == translate(two, 4));
  CHECK(mean(convolve(coin, two)) == mean(coin) + mean(two));
}

TEST_CASE("self_convolve") {
  const IntDist coin = dist({{0, q(1, 2)}, {1, q(1, 2)}});
  CHECK(self_convolve_exact(coin, 1) == coin);
  CHECK(self_convolve_exact(coin, 2) == dist({{0, q(1, 4)}, {1, q(1, 2)}, {2, q(1, 4)}}));
  CHECK(error_code_of([&] { self_convolve_exact(coin, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { self_convolve_exact(coin, 100, 64); }) == ErrorCode::kExactTooLarge);

  const IntDist d = dist({{0, q(1, 2)}, {1, q(1, 4)}, {2, q(1, 4)}});
  const FloatPmf big = self_convolve_float(d, 4096);
  CHECK(big.mass_drift() <= 1e-10);
  CHECK(big.offset == 0);
  CHECK(big.mass.size() == 8193);

  // Float and exact agree where both are feasible.
  const IntDist exact = self_convolve_exact(d, 12);
  const FloatPmf approx = self_convolve_float(d, 12);
  for (const auto& a : exact.atoms()) CHECK(approx.at(a.x) == doctest::Approx(to_double(a.p)));
}

TEST_CASE("concentration") {
  const auto point = concentration(IntDist::point(5));
  CHECK(point.argmax_x == 5);
  CHECK(std::get<Rational>(point.q_max) == 1);
  const auto peak = concentration(dist({{0, q(1, 4)}, {1, q(1, 2)}, {2, q(1, 4)}}));
  CHECK(peak.argmax_x == 1);
  CHECK(std::get<Rational>(peak.q_max) == q(1, 2));
  const auto tie = concentration(dist({{0, q(1, 2)}, {1, q(1, 2)}}));
  CHECK(tie.argmax_x == 0);
  const auto flt = concentration(to_float_pmf(dist({{3, q(1, 2)}, {5, q(1, 2)}})));
  CHECK(flt.argmax_x == 3);
  CHECK_FALSE(flt.exact);
}

TEST_CASE("compare_concentration examples") {
  const IntDist d = dist({{4, q(1, 3)}, {7, q(1, 6)}, {9, q(1, 2)}});
  const auto single = compare_concentration(std::vector{d});
  CHECK(single.lhs_q == q(1, 2));
  CHECK(single.rhs_q_best == q(1, 2));
  CHECK(single.inequality_holds);

  // Two copies of uniform{0,3}: outcomes 0, 3, 3, 6, so Q = 1/2. The
  // rearranged copies are uniform{0,1} whose sum also peaks at 1/2.
  const IntDist u03 = dist({{0, q(1, 2)}, {3, q(1, 2)}});
  const auto pair = compare_concentration(std::vector{u03, u03});
  CHECK(pair.lhs_q == q(1, 2));
  CHECK(pair.rhs_q_best == q(1, 2));
  CHECK(pair.inequality_holds);
  CHECK(pair.patterns_searched == 4);
  CHECK(pair.best_signs == std::vector<int>{-1, -1});

  const auto plus_only = compare_concentration(std::vector{u03, u03}, SignMode::kAllPlus);
  CHECK(plus_only.best_signs == std::vector<int>{1, 1});
  CHECK(plus_only.patterns_searched == 1);

  const std::vector<IntDist> many(5, u03);
  CHECK(error_code_of([&] { compare_concentration(many, SignMode::kSearch, 16); }) ==
        ErrorCode::kTooManyPatterns);
  CHECK(error_code_of([&] { compare_concentration(std::vector<IntDist>{}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("sign search prefers asymmetric cancellations") {
  // X+ = {0:1/2, 1:1/3, -1:1/6}; X+ - X+ is symmetric and more peaked than X+ + X+.
  const IntDist d = dist({{0, q(1, 2)}, {1, q(1, 3)}, {2, q(1, 6)}});
  const auto r = compare_concentration(std::vector{d, d});
  const IntDist plus = plus_rearrangement(d);
  const Rational minus_q = exact_q(convolve(plus, reflect(plus)));
  const Rational plus_q = exact_q(convolve(plus, plus));
  CHECK(r.rhs_q_best == std::max(minus_q, plus_q));
  CHECK(r.rhs_q_best >= r.rhs_q_all_plus);
}

TEST_CASE("llt_ratio and llt_scan") {
  CHECK(error_code_of([] { llt_ratio(dist({{0, q(1, 2)}, {2, q(1, 2)}}), 4); }) ==
        ErrorCode::kDegenerateLattice);
  CHECK(error_code_of([] { llt_ratio(IntDist::point(3), 4); }) == ErrorCode::kDegenerateLattice);

  const IntDist d = dist({{0, q(1, 2)}, {1, q(1, 4)}, {2, q(1, 4)}});
  const auto one = llt_ratio(d, 1);
  CHECK(one.q_n == 0.5);
  CHECK(one.ratio == doctest::Approx(0.5 * std::sqrt(2 * std::numbers::pi * 11.0 / 16.0)));

  const auto row = llt_ratio(d, 4096);
  CHECK(std::fabs(row.q_n - static_cast<double>(testing::llt_reference_peak(4096))) <= 1e-12);
  CHECK(std::fabs(row.ratio - 1.0) <= 0.05);

  const std::vector<std::uint64_t> ns{16, 64, 256, 1024};
  const auto rows = llt_scan(d, ns);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == ns[i]);
    CHECK(rows[i].q_n == doctest::Approx(static_cast<double>(testing::llt_reference_peak(ns[i]))));
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::fabs(rows[i].ratio - 1) <= std::fabs(rows[i - 1].ratio - 1));
  CHECK(llt_scan(d, std::vector<std::uint64_t>{1}).front().ratio == one.ratio);
  CHECK(llt_scan(d, {}).empty());
}

TEST_CASE("property: convolution laws") {
  std::mt19937_64 rng(60221);
  for (int iter = 0; iter < 200; ++iter) {
    const IntDist x = random_distribution(rng);
    const IntDist y = random_distribution(rng);
    const IntDist s = convolve(x, y);
    CAPTURE(iter);
    CHECK(s == testing::convolve_by_outcomes(x, y));
    CHECK(mean(s) == mean(x) + mean(y));
    CHECK(variance(s) == variance(x) + variance(y));
    CHECK(exact_q(s) <= std::min(exact_q(x), exact_q(y)));
    CHECK(exact_q(plus_rearrangement(x)) == exact_q(x));
  }
  for (int iter = 0; iter < 20; ++iter) {
    const IntDist d = random_distribution(rng, RandomDistConfig{3, 3, 8});
    const auto m = 1 + uniform_below(rng, 4);
    const auto n = 1 + uniform_below(rng, 4);
    CHECK(self_convolve_exact(d, m + n) ==
          convolve(self_convolve_exact(d, m), self_convolve_exact(d, n)));
  }
}
