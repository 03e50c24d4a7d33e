#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twomilton {

/// Exact rational with arbitrary-precision numerator and denominator, always
/// normalized with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational frac(long long num, long long den) { return Rational(num, den); }

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
/// Decimal expansion truncated toward zero to `digits` places.
std::string to_decimal(const Rational& r, int digits);
/// Parses "p", "p/q" or a finite decimal such as "0.05".
Rational parse_rational(const std::string& text);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

}  // namespace twomilton
