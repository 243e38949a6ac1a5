#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace curv {

// All curvature and dimension values are exact rationals; floats never enter
// any computation. cpp_rational keeps values reduced with positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with den taken positive; den must not be zero.
Rational make_rational(long long num, long long den);
Rational make_rational(const Integer& num, const Integer& den);

// Canonical "num/den" form, e.g. "-3/5", "0/1", "2/1".
std::string to_fraction_string(const Rational& r);

// Accepts "num/den" or a bare integer. Throws ParseError on malformed input.
Rational rational_from_string(std::string_view s);

}  // namespace curv
