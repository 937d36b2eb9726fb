#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace symdec {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

/// Parses "a/b" or "a" (optional leading '-'). Anything else, including
/// decimal or exponent notation, throws Error(kParseError).
Rational parse_rational(std::string_view text);

/// "a/b" in lowest terms, or "a" for integers.
std::string to_string(const Rational& r);

double to_double(const Rational& r);
long double to_long_double(const Rational& r);

Rational floor(const Rational& r);

/// Shortest round-trip decimal representation, '.' separator, no locale.
std::string format_double(double x);

/// Number of bits in the magnitude of |n|.
std::size_t bit_length(const BigInt& n);

}  // namespace symdec
