#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pgg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Renders a rational as "num/den" ("3" stays "3/1" for report stability).
std::string rational_to_string(const Rational& r);

// Parses "num/den" or a plain integer. Throws ValidationError on junk.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

}  // namespace pgg
