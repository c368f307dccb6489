#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dimjac {

/// Exact rational magnitude. Always kept canonical (reduced, positive
/// denominator) by the helpers below.
using Rational = mpq_class;

/// Parses an integer, a decimal ("4.3", "1e-3", "-0.25") or a fraction
/// ("3/43") exactly. Throws DocumentError on malformed text and
/// ZeroDenominator for "p/0".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Exact value of a finite double (every double is a dyadic rational).
Rational exact_rational(double value);

/// Rational whose decimal expansion is the shortest round-trip representation
/// of `value`, so 0.001 becomes 1/1000 rather than its binary neighbour.
Rational decimal_rational(double value);

/// Shortest round-trip decimal text of a double.
std::string format_double(double value);

/// r^e for an integer exponent; throws DivisionByZero for 0^negative.
Rational pow(const Rational& base, int exponent);

/// Correctly rounded (nearest, ties to even) conversion to double.
/// mpq_get_d truncates, which would break 1-ulp round-trip guarantees.
double to_double(const Rational& r);

}  // namespace dimjac
