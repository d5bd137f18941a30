#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace heightzeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/4", "1.25" or "2.5e-3" into an exact rational.
/// Decimal input is converted digit-for-digit, so "0.1" is exactly 1/10.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Always "num/den", including "3/1" and "0/1".
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace heightzeta
