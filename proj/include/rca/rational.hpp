#ifndef RCA_RATIONAL_HPP
#define RCA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rca {

// Exact arbitrary-precision rational. Always kept normalized (gcd 1,
// positive denominator) by the backing type; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q" with optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace rca

#endif
