#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace necklace {

// Exact arithmetic substrate for every coefficient in the project.
// cpp_rational keeps numerator/denominator gcd-reduced with a positive
// denominator, which is exactly the normal form the text format below
// relies on. No floating point enters any table or series computation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num" when the denominator is 1, "num/den" otherwise.
std::string format_rational(const Rational& q);

// Inverse of format_rational; accepts an optional "/den" suffix.
// Throws UsageError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Exact value of a finite double (doubles are dyadic rationals).
Rational rational_from_double(double x);

double to_double(const Rational& q);

BigInt factorial(int n);

}  // namespace necklace
