#pragma once

#include <string_view>

#include "dimjac/lang/ast.hpp"
#include "dimjac/measurand/quantity.hpp"

namespace dimjac::lang {

/// Denotation of a unit expression: dimension and scale in base units.
/// Throws UnknownUnit for symbols the system does not register.
UnitMeaning resolve_unit(const UnitExpr& unit, const UnitSystem& system);

/// Folds the tree with the dimensioned-field operations. Rational mode is
/// exact; double mode rounds each literal once. Throws DimensionMismatch,
/// UnknownUnit, DivisionByZero and NumericOverflow.
template <Magnitude M>
BasicQuantity<M> evaluate(const QuantityExpr& expr, const UnitSystemPtr& system);

/// tokenize + parse + evaluate.
template <Magnitude M>
BasicQuantity<M> evaluate(std::string_view input, const UnitSystemPtr& system);

/// Exact numerator and denominator size beyond which rational results are
/// rejected as overflow.
inline constexpr std::size_t kMaxRationalBits = 1 << 16;

}  // namespace dimjac::lang
