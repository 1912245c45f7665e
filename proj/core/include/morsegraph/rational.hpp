#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace morsegraph {

// Arbitrary-precision rational; curvature totals and Morse-file values must
// compare exactly, with no tolerance anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "-12", "3.25", "1e-3", "2.5E2" exactly (no floating-point rounding).
// Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(std::string_view text);

// "7/3" for non-integers, "4" when the denominator is 1.
std::string rational_to_string(const Rational& q);

}  // namespace morsegraph
