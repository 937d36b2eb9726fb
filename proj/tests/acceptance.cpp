// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "symdec/cli.hpp"
#include "symdec/dispersion.hpp"
#include "symdec/error.hpp"
#include "symdec/io.hpp"
#include "symdec/oracle.hpp"
#include "symdec/rearrange.hpp"
#include "symdec/sums.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace symdec;
using symdec::testing::dist;
using symdec::testing::q;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(const std::string& name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && elapsed > time_limit_s) {
    outcome.pass = false;
    outcome.detail += " (over the " + std::to_string(time_limit_s) + " s limit)";
  }
  if (!outcome.pass) ++failures;
  std::ostringstream line;
  line << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << "  (" << std::fixed;
  line.precision(2);
  line << elapsed << " s)";
  if (!outcome.detail.empty()) line << "  " << outcome.detail;
  std::cout << line.str() << std::endl;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string run_cli(const std::vector<std::string>& args, int& status) {
  std::ostringstream out, err;
  status = run_command_line(args, out, err);
  return out.str();
}

const auto kSquare = DispersionFunction::square();
const auto kIdentity = DispersionFunction::identity();

}  // namespace

int main() {
  criterion("theorem oracle suite: 200 multisets, windows [-r,r] up to width 9, square, exact", 60,
            [] {
              Outcome o;
              std::mt19937_64 rng(1);
              std::uint64_t windows = 0, assignments = 0;
              for (int i = 0; i < 200; ++i) {
                const auto probs = random_probabilities(rng, RandomDistConfig{6, 6, 64});
                const auto n = static_cast<std::int64_t>(probs.size());
                for (std::int64_t r = n / 2; 2 * r + 1 <= 9; ++r) {
                  if (2 * r + 1 < n) continue;
                  const auto rep = verify_theorem(probs, Window{-r, r}, kSquare);
                  ++windows;
                  assignments += rep.num_assignments;
                  o.require(rep.theorem_holds, "theorem_holds at multiset " + std::to_string(i));
                  o.require(rep.equality_cases_all_equivalent,
                            "non-equivalent minimizer at multiset " + std::to_string(i));
                  o.require(rep.plus_form_value == rep.min_value, "plus value != min");
                }
              }
              if (o.pass)
                o.detail = std::to_string(windows) + " windows, " + std::to_string(assignments) +
                           " assignments";
              return o;
            });

  criterion("closed forms: 500 distributions, square/identity exact, power:2 within 1e-9", 10, [] {
    Outcome o;
    std::mt19937_64 rng(2);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const IntDist d = random_distribution(rng);
      const auto sq = dispersion(d, kSquare);
      o.require(std::get<Rational>(sq.value) == variance(d), "square value != variance");
      o.require(std::get<Rational>(sq.minimizer_lo) == mean(d) && !sq.is_interval(),
                "square minimizer != mean");
      const auto id = dispersion(d, kIdentity);
      const MedianInterval m = median_set(d);
      o.require(std::get<Rational>(id.value) == mad_median(d), "identity value != MAD");
      o.require(std::get<Rational>(id.minimizer_lo) == m.lo &&
                    std::get<Rational>(id.minimizer_hi) == m.hi,
                "identity minimizers != median interval");
      const auto p2 = dispersion(d, DispersionFunction::power(2.0));
      const double da = std::fabs(std::get<double>(p2.minimizer_lo) - to_double(mean(d)));
      const double dv = std::fabs(std::get<double>(p2.value) - to_double(variance(d)));
      worst = std::max({worst, da, dv});
      o.require(da <= 1e-9 && dv <= 1e-9, "golden-section off by more than 1e-9");
    }
    std::ostringstream s;
    s << "max golden-section deviation " << worst;
    if (o.pass) o.detail = s.str();
    return o;
  });

  criterion("equality characterization: 50 plus forms (+ translates/reflections), 50 strict", 0,
            [] {
              Outcome o;
              std::mt19937_64 rng(3);
              for (int i = 0; i < 50; ++i) {
                const IntDist plus = testing::random_plus_form(rng);
                const auto k = static_cast<std::int64_t>(uniform_below(rng, 21)) - 10;
                for (const IntDist& d : {plus, translate(plus, k), translate(reflect(plus), k)}) {
                  const auto r = check_main_inequality(d, kSquare);
                  o.require(r.equality && r.equivalence_explains_equality,
                            "plus-form instance " + std::to_string(i) + " not an equality case");
                }
              }
              int strict = 0;
              while (strict < 50) {
                const IntDist d = random_distribution(rng);
                if (equivalent_up_to_translation_reflection(d, plus_rearrangement(d))) continue;
                const auto r = check_main_inequality(d, kSquare);
                o.require(r.holds && !r.equality &&
                              std::get<Rational>(r.d_f_x_plus) < std::get<Rational>(r.d_f_x),
                          "non-equivalent instance without strict inequality");
                ++strict;
              }
              return o;
            });

  criterion("proof chain: 1000 (d, mean) pairs, p.v >= p.v' >= p.w and v' >= w, exact", 0, [] {
    Outcome o;
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
      const IntDist d = random_distribution(rng);
      const auto t = proof_chain(d, kSquare, mean(d));
      o.require(t.dot_pv == variance(d), "chain head is not D_f(X)");
      o.require(t.dot_pv >= t.dot_pv_sorted && t.dot_pv_sorted >= t.dot_pw, "chain out of order");
      for (std::size_t j = 0; j < t.w_vec.size(); ++j)
        o.require(t.v_sorted_vec[j] - t.w_vec[j] >= 0, "negative component of v' - w");
    }
    return o;
  });

  criterion("rearrangement algebra: 1000 inputs incl. duplicated probabilities, exact", 0, [] {
    Outcome o;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
      // Every other input draws weights from {1, 2, 3} to force ties.
      const RandomDistConfig config{6, 6, i % 2 == 0 ? 64u : 3u};
      const IntDist d = random_distribution(rng, config);
      const IntDist plus = plus_rearrangement(d);
      const auto k = static_cast<std::int64_t>(uniform_below(rng, 31)) - 15;
      o.require(plus_rearrangement(plus) == plus, "not idempotent");
      o.require(plus_rearrangement(translate(d, k)) == plus, "not translation invariant");
      o.require(plus_rearrangement(reflect(d)) == plus, "not reflection invariant");
      o.require(sorted_probabilities(plus) == sorted_probabilities(d), "multiset changed");
      o.require(plus == testing::plus_by_walk(d), "disagrees with outward-walk construction");
      std::vector<Atom> atoms(d.atoms().begin(), d.atoms().end());
      std::vector<std::int64_t> values;
      for (const auto& a : atoms) values.push_back(a.x);
      for (std::size_t j = values.size(); j > 1; --j)
        std::swap(values[j - 1], values[uniform_below(rng, j)]);
      for (std::size_t j = 0; j < atoms.size(); ++j) atoms[j].x = values[j];
      o.require(plus_rearrangement(make_dist(atoms)) == plus, "depends on tie order");
    }
    return o;
  });

  criterion("convolution: 200 pairs, mass, mean/variance additivity, point mass, Q bound", 0, [] {
    Outcome o;
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
      const IntDist x = random_distribution(rng);
      const IntDist y = random_distribution(rng);
      const IntDist s = convolve(x, y);
      Rational total = 0;
      for (const auto& a : s.atoms()) total += a.p;
      o.require(total == 1, "mass not conserved");
      o.require(s == testing::convolve_by_outcomes(x, y), "disagrees with outcome listing");
      o.require(mean(s) == mean(x) + mean(y), "mean not additive");
      o.require(variance(s) == variance(x) + variance(y), "variance not additive");
      const auto k = static_cast<std::int64_t>(uniform_below(rng, 21)) - 10;
      o.require(convolve(x, IntDist::point(k)) == translate(x, k), "point mass is not a shift");
      const auto qs = std::get<Rational>(concentration(s).q_max);
      o.require(qs <= std::min(std::get<Rational>(concentration(x).q_max),
                               std::get<Rational>(concentration(y).q_max)),
                "Q(X+Y) > min(Q(X), Q(Y))");
    }
    return o;
  });

  criterion("LLT: {0:1/2,1:1/4,2:1/4} at n=4096 |ratio-1| <= 0.05; uniform{0,2} degenerate", 30,
            [] {
              Outcome o;
              const IntDist d = dist({{0, q(1, 2)}, {1, q(1, 4)}, {2, q(1, 4)}});
              const auto row = llt_ratio(d, 4096);
              const long double reference = testing::llt_reference_peak(4096);
              o.require(std::fabs(row.q_n - static_cast<double>(reference)) <= 1e-9 * reference,
                        "float convolution disagrees with the trinomial reference");
              o.require(std::fabs(row.ratio - 1.0) <= 0.05, "ratio outside 1 +/- 0.05");
              bool degenerate = false;
              try {
                llt_ratio(dist({{0, q(1, 2)}, {2, q(1, 2)}}), 4096);
              } catch (const Error& e) {
                degenerate = e.code() == ErrorCode::kDegenerateLattice;
              }
              o.require(degenerate, "uniform{0,2} did not raise DegenerateLattice");
              std::ostringstream s;
              s.precision(10);
              s << "q_n=" << row.q_n << " ratio=" << row.ratio;
              if (o.pass) o.detail = s.str();
              return o;
            });

  criterion("sign-search report: uniform{0,3}, n=2..8, lhs_q <= rhs_q_best", 0, [] {
    Outcome o;
    const IntDist u = dist({{0, q(1, 2)}, {3, q(1, 2)}});
    std::string table;
    for (std::size_t n = 2; n <= 8; ++n) {
      const std::vector<IntDist> copies(n, u);
      const auto r = compare_concentration(copies);
      o.require(r.patterns_searched == (std::uint64_t{1} << n), "search not exhaustive");
      o.require(r.inequality_holds, "lhs_q > rhs_q_best at n=" + std::to_string(n));
      table += " n=" + std::to_string(n) + ":" + to_string(r.lhs_q) + "<=" + to_string(r.rhs_q_best);
    }
    if (o.pass) o.detail = table.substr(1);
    return o;
  });

  criterion("CLI determinism and golden files", 0, [] {
    Outcome o;
    int s1 = 0, s2 = 0;
    const auto first = run_cli({"sweep", "--seed", "42", "--count", "100"}, s1);
    const auto second = run_cli({"sweep", "--seed", "42", "--count", "100"}, s2);
    o.require(s1 == 0 && s2 == 0, "sweep failed");
    o.require(first == second, "sweep output not byte-identical");
    o.require(Json::parse(first)["passed"] == 100, "sweep reported failures");
    const std::string g = SYMDEC_GOLDEN_DIR;
    const std::vector<std::pair<std::vector<std::string>, std::string>> goldens{
        {{"rearrange", "--in", g + "/abstract_example.json"}, "rearrange.expected.json"},
        {{"dispersion", "--in", g + "/two_point.json", "--f", "square"},
         "dispersion_square.expected.json"},
        {{"oracle", "--probs", R"(["2/3","1/3"])", "--window", "-1:1", "--f", "square"},
         "oracle_square.expected.json"},
        {{"check", "--in", g + "/two_point.json", "--f", "square"}, "check_square.expected.json"},
        {{"compare", "--in", g + "/two_point.json", "--n", "3"}, "compare_n3.expected.json"},
        {{"sweep", "--seed", "42", "--count", "100", "--f", "square"},
         "sweep_seed42.expected.json"},
    };
    for (const auto& [args, expected] : goldens) {
      int status = 0;
      const auto out = run_cli(args, status);
      o.require(status == 0 && out == slurp(g + "/" + expected), "golden mismatch: " + expected);
    }
    return o;
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
