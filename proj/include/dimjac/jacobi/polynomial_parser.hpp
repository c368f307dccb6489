#pragma once

#include <span>
#include <string>
#include <string_view>

#include "dimjac/jacobi/polynomial.hpp"

namespace dimjac {

/// Parses polynomial text over the named variables: numbers (including
/// "p/q"), variable names, + - *, juxtaposition, '/' by a nonzero constant,
/// parentheses and integer powers (negative only on monomials). Throws
/// LexError or ParseError.
Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> names);

inline constexpr int kMaxPolynomialExponent = 64;
inline constexpr int kMaxPolynomialDegree = 256;
// Upper bound on the number of terms an intermediate product may reach.
inline constexpr double kMaxPolynomialTerms = 20000;

}  // namespace dimjac
