#pragma once

#include "symdec/int_dist.hpp"
#include "symdec/rational.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symdec {

/// Either an exact rational or a double, depending on which path produced it.
using Number = std::variant<Rational, double>;

double to_double(const Number& n);
std::string to_string(const Number& n);

/// Non-decreasing cost f with f(0) = 0: x, x^2 or x^p (p >= 1).
class DispersionFunction {
 public:
  enum class Kind { kIdentity, kSquare, kPower };

  static DispersionFunction identity() { return DispersionFunction(Kind::kIdentity, 1.0); }
  static DispersionFunction square() { return DispersionFunction(Kind::kSquare, 2.0); }
  /// Throws Error(kInvalidArgument) unless exponent >= 1 and finite.
  static DispersionFunction power(double exponent);

  /// "identity", "square" or "power:<p>".
  static DispersionFunction parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }

  /// Identity and Square are evaluated in exact rational arithmetic.
  bool is_exact() const noexcept { return kind_ != Kind::kPower; }

  /// f' > 0 on (0, inf) and f'(0+) = 0: the hypothesis under which the
  /// inequality D_f(X+) <= D_f(X) is strict off the equivalence class of X+.
  bool strictness_eligible() const noexcept {
    return kind_ == Kind::kSquare || (kind_ == Kind::kPower && exponent_ > 1.0);
  }

  std::string name() const;

  /// Exact evaluation; throws Error(kInvalidArgument) for Power.
  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  long double operator()(long double x) const;

  friend bool operator==(const DispersionFunction&, const DispersionFunction&) = default;

 private:
  DispersionFunction(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}

  Kind kind_;
  double exponent_;
};

/// D_f(X) together with the minimizer set M_f(X) = [minimizer_lo, minimizer_hi].
struct DispersionResult {
  Number value;
  Number minimizer_lo;
  Number minimizer_hi;
  bool exact = true;
  /// Bracket width on the minimizer when !exact.
  double tolerance = 0.0;

  bool is_interval() const { return minimizer_lo != minimizer_hi; }
};

/// Stopping width of the golden-section bracket on a.
inline constexpr double kGoldenSectionTolerance = 1e-12;
/// Values closer than this are declared equal on the floating-point path.
inline constexpr double kFloatEqualityTolerance = 1e-9;

/// E f(|X - a|). Rational overload requires f.is_exact().
Rational expected_f_deviation(const IntDist& d, const DispersionFunction& f, const Rational& a);
double expected_f_deviation(const IntDist& d, const DispersionFunction& f, double a);
Number expected_f_deviation(const IntDist& d, const DispersionFunction& f, const Number& a);

/// min over real a of E f(|X - a|), and the set of minimizers.
///
/// Identity gives the mean absolute deviation around the median and the full
/// median interval; Square gives the variance and the mean. Power(p) runs a
/// golden-section search over the support hull, which contains every
/// minimizer because f is non-decreasing, and reports a single point.
DispersionResult dispersion(const IntDist& d, const DispersionFunction& f);

struct MainInequalityReport {
  Number d_f_x;
  Number d_f_x_plus;
  bool holds = false;
  bool equality = false;
  /// X ~ X+ + k or X ~ -X+ + k for some integer k.
  bool equivalence_explains_equality = false;
};

MainInequalityReport check_main_inequality(const IntDist& d, const DispersionFunction& f);

/// Distance from a to the nearest integer, in [0, 1/2].
template <typename Scalar>
Scalar nearest_integer_distance(const Scalar& a);

/// (f(a'), f(1-a'), f(1+a'), f(2-a'), f(2+a'), ...) truncated to n entries.
template <typename Scalar>
std::vector<Scalar> w_vector(std::size_t n, const Scalar& a_prime, const DispersionFunction& f);

/// The rearrangement chain p.v >= p.v' >= p.w for a centering value a.
///
/// p holds the probabilities in (prob desc, value asc) order, v the costs
/// f(|x - a|) in the same order, v' is v sorted non-decreasingly and w is the
/// cost vector of the plus form centred at a' = nearest_integer_distance(a).
template <typename Scalar>
struct ProofChainTrace {
  Scalar a{};
  Scalar a_prime{};
  std::vector<Scalar> p_vec;
  std::vector<Scalar> v_vec;
  std::vector<Scalar> v_sorted_vec;
  std::vector<Scalar> w_vec;
  Scalar dot_pv{};
  Scalar dot_pv_sorted{};
  Scalar dot_pw{};
  /// dot_pv >= dot_pv_sorted >= dot_pw and v' >= w componentwise.
  bool chain_holds = false;
};

/// Exact traces throw std::logic_error if the chain fails; floating-point
/// traces report chain_holds with a relative slack of 1e-12.
template <typename Scalar>
ProofChainTrace<Scalar> proof_chain(const IntDist& d, const DispersionFunction& f,
                                    const Scalar& a);

extern template Rational nearest_integer_distance<Rational>(const Rational&);
extern template double nearest_integer_distance<double>(const double&);
extern template std::vector<Rational> w_vector<Rational>(std::size_t, const Rational&,
                                                         const DispersionFunction&);
extern template std::vector<double> w_vector<double>(std::size_t, const double&,
                                                     const DispersionFunction&);
extern template ProofChainTrace<Rational> proof_chain<Rational>(const IntDist&,
                                                                const DispersionFunction&,
                                                                const Rational&);
extern template ProofChainTrace<double> proof_chain<double>(const IntDist&,
                                                            const DispersionFunction&,
                                                            const double&);

}  // namespace symdec
