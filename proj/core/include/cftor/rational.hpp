#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "cftor/errors.hpp"

namespace cftor {

using Integer = boost::multiprecision::mpz_int;
/// Exact arbitrary-precision rational in canonical form
/// (denominator > 0, fraction fully reduced).
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

/// Serializes as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", "-p/q"; whitespace around tokens is ignored.
/// Throws ParseError on malformed input, DivisionByZero on zero denominator.
Rational parse_rational(std::string_view text);

/// Exact square root if q is a square of a rational, otherwise nullopt.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Exact n-th root if one exists over the rationals, otherwise nullopt.
/// For even n, q must be non-negative and the non-negative root is returned.
std::optional<Rational> rational_nth_root(const Rational& q, unsigned n);

/// x^e with integer exponent (e may be negative; then x must be nonzero).
Rational rational_pow(const Rational& x, long e);

} // namespace cftor
