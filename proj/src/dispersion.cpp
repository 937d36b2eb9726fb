#include "symdec/dispersion.hpp"

#include "symdec/error.hpp"
#include "symdec/rearrange.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace symdec {

namespace {

Rational abs_of(const Rational& x) { return boost::multiprecision::abs(x); }
double abs_of(double x) { return std::fabs(x); }
Rational floor_of(const Rational& x) { return floor(x); }
double floor_of(double x) { return std::floor(x); }

template <typename Scalar>
Scalar from_rational(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return r;
  } else {
    return to_double(r);
  }
}

// F(c) - F(e) for F(a) = E|X - a|^p, computed term by term so the result keeps
// full relative precision when c and e are close to each other and to the
// minimizer. Each term u^p - v^p is rewritten as v^p * expm1(p * log1p((u-v)/v))
// with u - v formed without cancellation when x lies on one side of both probes.
long double objective_difference(const IntDist& d, long double exponent, long double c,
                                 long double e) {
  long double total = 0.0L;
  const long double left = std::min(c, e);
  const long double right = std::max(c, e);
  for (const auto& atom : d.atoms()) {
    const auto x = static_cast<long double>(atom.x);
    const long double u = std::fabs(x - c);
    const long double v = std::fabs(x - e);
    long double gap;
    if (x >= right)
      gap = e - c;
    else if (x <= left)
      gap = c - e;
    else
      gap = u - v;
    long double term;
    if (v == 0.0L)
      term = std::pow(u, exponent);
    else if (u == 0.0L)
      term = -std::pow(v, exponent);
    else
      term = std::pow(v, exponent) * std::expm1(exponent * std::log1p(gap / v));
    total += to_long_double(atom.p) * term;
  }
  return total;
}

long double power_objective(const IntDist& d, long double exponent, long double a) {
  long double total = 0.0L;
  for (const auto& atom : d.atoms())
    total += to_long_double(atom.p) *
             std::pow(std::fabs(static_cast<long double>(atom.x) - a), exponent);
  return total;
}

DispersionResult power_dispersion(const IntDist& d, const DispersionFunction& f) {
  const long double exponent = f.exponent();
  long double lo = d.min_value();
  long double hi = d.max_value();
  const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double c = hi - inv_phi * (hi - lo);
  long double e = lo + inv_phi * (hi - lo);
  for (int iter = 0; iter < 500 && hi - lo > kGoldenSectionTolerance; ++iter) {
    if (objective_difference(d, exponent, c, e) < 0.0L) {
      hi = e;
      e = c;
      c = hi - inv_phi * (hi - lo);
    } else {
      lo = c;
      c = e;
      e = lo + inv_phi * (hi - lo);
    }
  }
  const long double best = (lo + hi) / 2.0L;
  DispersionResult result;
  result.value = static_cast<double>(power_objective(d, exponent, best));
  result.minimizer_lo = static_cast<double>(best);
  result.minimizer_hi = static_cast<double>(best);
  result.exact = false;
  result.tolerance = kGoldenSectionTolerance;
  return result;
}

}  // namespace

double to_double(const Number& n) {
  return std::visit(
      [](const auto& v) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>)
          return symdec::to_double(v);
        else
          return v;
      },
      n);
}

std::string to_string(const Number& n) {
  if (const auto* r = std::get_if<Rational>(&n)) return to_string(*r);
  return format_double(std::get<double>(n));
}

DispersionFunction DispersionFunction::power(double exponent) {
  if (!std::isfinite(exponent) || exponent < 1.0)
    throw Error(ErrorCode::kInvalidArgument,
                "power exponent must be a finite number >= 1, got " + format_double(exponent));
  return DispersionFunction(Kind::kPower, exponent);
}

DispersionFunction DispersionFunction::parse(std::string_view spec) {
  if (spec == "identity") return identity();
  if (spec == "square") return square();
  constexpr std::string_view prefix = "power:";
  if (spec.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = spec.substr(prefix.size());
    double p = 0.0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
      return power(p);
  }
  throw Error(ErrorCode::kParseError,
              "unknown dispersion function \"" + std::string(spec) +
                  "\" (expected identity, square or power:<p>)");
}

std::string DispersionFunction::name() const {
  switch (kind_) {
    case Kind::kIdentity: return "identity";
    case Kind::kSquare: return "square";
    case Kind::kPower: return "power:" + format_double(exponent_);
  }
  return "?";
}

Rational DispersionFunction::operator()(const Rational& x) const {
  switch (kind_) {
    case Kind::kIdentity: return x;
    case Kind::kSquare: return x * x;
    case Kind::kPower: break;
  }
  throw Error(ErrorCode::kInvalidArgument, name() + " has no exact evaluation");
}

double DispersionFunction::operator()(double x) const {
  return static_cast<double>((*this)(static_cast<long double>(x)));
}

long double DispersionFunction::operator()(long double x) const {
  switch (kind_) {
    case Kind::kIdentity: return x;
    case Kind::kSquare: return x * x;
    case Kind::kPower: return std::pow(x, static_cast<long double>(exponent_));
  }
  return x;
}

Rational expected_f_deviation(const IntDist& d, const DispersionFunction& f, const Rational& a) {
  Rational total = 0;
  for (const auto& atom : d.atoms()) total += atom.p * f(abs_of(Rational(atom.x) - a));
  return total;
}

double expected_f_deviation(const IntDist& d, const DispersionFunction& f, double a) {
  long double total = 0.0L;
  for (const auto& atom : d.atoms())
    total += to_long_double(atom.p) *
             f(std::fabs(static_cast<long double>(atom.x) - static_cast<long double>(a)));
  return static_cast<double>(total);
}

Number expected_f_deviation(const IntDist& d, const DispersionFunction& f, const Number& a) {
  if (const auto* r = std::get_if<Rational>(&a); r && f.is_exact())
    return expected_f_deviation(d, f, *r);
  return expected_f_deviation(d, f, to_double(a));
}

DispersionResult dispersion(const IntDist& d, const DispersionFunction& f) {
  switch (f.kind()) {
    case DispersionFunction::Kind::kIdentity: {
      const MedianInterval medians = median_set(d);
      return {mad_median(d), medians.lo, medians.hi, true, 0.0};
    }
    case DispersionFunction::Kind::kSquare: {
      const Rational m = mean(d);
      return {variance(d), m, m, true, 0.0};
    }
    case DispersionFunction::Kind::kPower:
      return power_dispersion(d, f);
  }
  throw std::logic_error("unhandled dispersion kind");
}

MainInequalityReport check_main_inequality(const IntDist& d, const DispersionFunction& f) {
  const IntDist plus = plus_rearrangement(d);
  MainInequalityReport report;
  report.d_f_x = dispersion(d, f).value;
  report.d_f_x_plus = dispersion(plus, f).value;
  if (f.is_exact()) {
    const auto& original = std::get<Rational>(report.d_f_x);
    const auto& rearranged = std::get<Rational>(report.d_f_x_plus);
    report.holds = rearranged <= original;
    report.equality = rearranged == original;
  } else {
    const double original = std::get<double>(report.d_f_x);
    const double rearranged = std::get<double>(report.d_f_x_plus);
    report.holds = rearranged <= original + kFloatEqualityTolerance;
    report.equality = std::fabs(rearranged - original) <= kFloatEqualityTolerance;
  }
  report.equivalence_explains_equality = equivalent_up_to_translation_reflection(d, plus);
  return report;
}

template <typename Scalar>
Scalar nearest_integer_distance(const Scalar& a) {
  const Scalar below = a - floor_of(a);
  const Scalar above = Scalar(1) - below;
  return below < above ? below : above;
}

template <typename Scalar>
std::vector<Scalar> w_vector(std::size_t n, const Scalar& a_prime, const DispersionFunction& f) {
  std::vector<Scalar> w;
  w.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar step(static_cast<std::int64_t>((k + 1) / 2));
    // Ranks 1, 3, 5, ... sit at distance j - a'; ranks 0, 2, 4, ... at j + a'.
    w.push_back(f(k % 2 == 1 ? Scalar(step - a_prime) : Scalar(step + a_prime)));
  }
  return w;
}

template <typename Scalar>
ProofChainTrace<Scalar> proof_chain(const IntDist& d, const DispersionFunction& f,
                                    const Scalar& a) {
  ProofChainTrace<Scalar> trace;
  trace.a = a;
  trace.a_prime = nearest_integer_distance(a);
  const auto ranked = rank_atoms(d);
  for (const auto& atom : ranked) {
    trace.p_vec.push_back(from_rational<Scalar>(atom.p));
    trace.v_vec.push_back(f(abs_of(Scalar(atom.x) - a)));
  }
  trace.v_sorted_vec = trace.v_vec;
  std::sort(trace.v_sorted_vec.begin(), trace.v_sorted_vec.end());
  trace.w_vec = w_vector(ranked.size(), trace.a_prime, f);

  trace.dot_pv = Scalar(0);
  trace.dot_pv_sorted = Scalar(0);
  trace.dot_pw = Scalar(0);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    trace.dot_pv += trace.p_vec[i] * trace.v_vec[i];
    trace.dot_pv_sorted += trace.p_vec[i] * trace.v_sorted_vec[i];
    trace.dot_pw += trace.p_vec[i] * trace.w_vec[i];
  }

  if constexpr (std::is_same_v<Scalar, Rational>) {
    bool ok = trace.dot_pv >= trace.dot_pv_sorted && trace.dot_pv_sorted >= trace.dot_pw;
    for (std::size_t i = 0; i < ranked.size(); ++i)
      ok = ok && trace.v_sorted_vec[i] >= trace.w_vec[i];
    if (!ok) throw std::logic_error("rearrangement chain violated in exact arithmetic");
    trace.chain_holds = true;
  } else {
    const double slack = 1e-12 * std::max(1.0, std::fabs(trace.dot_pv));
    bool ok = trace.dot_pv + slack >= trace.dot_pv_sorted &&
              trace.dot_pv_sorted + slack >= trace.dot_pw;
    for (std::size_t i = 0; i < ranked.size(); ++i)
      ok = ok && trace.v_sorted_vec[i] + slack >= trace.w_vec[i];
    trace.chain_holds = ok;
  }
  return trace;
}

template Rational nearest_integer_distance<Rational>(const Rational&);
template double nearest_integer_distance<double>(const double&);
template std::vector<Rational> w_vector<Rational>(std::size_t, const Rational&,
                                                  const DispersionFunction&);
template std::vector<double> w_vector<double>(std::size_t, const double&,
                                              const DispersionFunction&);
template ProofChainTrace<Rational> proof_chain<Rational>(const IntDist&,
                                                         const DispersionFunction&,
                                                         const Rational&);
template ProofChainTrace<double> proof_chain<double>(const IntDist&, const DispersionFunction&,
                                                     const double&);

}  // namespace symdec
