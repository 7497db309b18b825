#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hexmg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "3", "-2", "1/10", "0.125" or "1e-3" into an exact rational.
Rational parse_rational(const std::string& text);

// Fixed-point decimal, rounded half to even.
std::string to_decimal(const Rational& x, int places = 6);

double to_double(const Rational& x);

std::string to_fraction_string(const Rational& x);

}  // namespace hexmg
