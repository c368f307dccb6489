#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dimjac::lang {

/// Unit expression: a symbol, an integer power, a product or a quotient.
struct UnitExpr {
  enum class Kind { kSymbol, kPower, kProduct, kQuotient };

  Kind kind;
  std::string symbol;  // kSymbol
  int exponent = 0;    // kPower
  std::shared_ptr<const UnitExpr> lhs, rhs;  // rhs unused for kPower
  std::size_t offset = 0;

  static std::shared_ptr<const UnitExpr> make_symbol(std::string s,
                                                     std::size_t offset);
  static std::shared_ptr<const UnitExpr> make_power(
      std::shared_ptr<const UnitExpr> base, int exponent);
  static std::shared_ptr<const UnitExpr> make_binary(
      Kind kind, std::shared_ptr<const UnitExpr> lhs,
      std::shared_ptr<const UnitExpr> rhs);
};

using UnitExprPtr = std::shared_ptr<const UnitExpr>;

struct QuantityExpr {
  enum class Kind { kLiteral, kNeg, kAdd, kSub, kMul, kDiv, kPow, kParen };

  Kind kind;
  std::string number;  // kLiteral: numeric text, "1" for a bare unit
  UnitExprPtr unit;    // kLiteral: may be null (dimensionless)
  int exponent = 0;    // kPow
  std::shared_ptr<const QuantityExpr> lhs, rhs;
  std::size_t offset = 0;
};

using QuantityExprPtr = std::shared_ptr<const QuantityExpr>;

/// Structural rendering such as "Div(Lit(300,cm^3),Lit(4.3,L/min))".
/// Parentheses are transparent.
std::string describe(const QuantityExpr& expr);
std::string describe(const UnitExpr& expr);

}  // namespace dimjac::lang
