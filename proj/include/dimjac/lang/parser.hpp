#pragma once

#include <span>
#include <string_view>

#include "dimjac/lang/ast.hpp"
#include "dimjac/lang/token.hpp"

namespace dimjac::lang {

/// Precedence, tightest first: '^', number-unit juxtaposition, '*' and '/'
/// (left associative), unary '-', binary '+' and '-' (left associative).
/// Throws ParseError naming the expected token.
QuantityExprPtr parse(std::span<const Token> tokens);

/// tokenize + parse.
QuantityExprPtr parse(std::string_view input);

/// Largest accepted |exponent| in '^' and the nesting depth limit.
inline constexpr int kMaxExponent = 64;
inline constexpr int kMaxDepth = 200;

}  // namespace dimjac::lang
