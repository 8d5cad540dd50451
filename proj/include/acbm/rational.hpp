#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace acbm {

// Exact rational scalar. The backend keeps values in lowest terms with a
// positive denominator, so identical values have identical representations.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// Prints "n" or "n/d" with the sign on the numerator; round-trips through
// parse_rational and through the expression grammar.
std::string to_string(const Rational& q);

// Accepts an optional leading '-', digits, and an optional "/digits" tail.
// Throws std::invalid_argument on anything else (including zero denominators).
Rational parse_rational(std::string_view text);

}  // namespace acbm
