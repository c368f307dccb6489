#include "dimjac/lang/evaluator.hpp"

#include <cmath>

#include "dimjac/lang/parser.hpp"

namespace dimjac::lang {

UnitMeaning resolve_unit(const UnitExpr& unit, const UnitSystem& system) {
  switch (unit.kind) {
    case UnitExpr::Kind::kSymbol: {
      auto meaning = system.find(unit.symbol);
      if (!meaning)
        throw UnknownUnit("unknown unit '" + unit.symbol + "' at offset " +
                          std::to_string(unit.offset));
      return *meaning;
    }
    case UnitExpr::Kind::kPower: {
      UnitMeaning base = resolve_unit(*unit.lhs, system);
      return {base.dim * unit.exponent, pow(base.scale, unit.exponent)};
    }
    case UnitExpr::Kind::kProduct:
    case UnitExpr::Kind::kQuotient: {
      UnitMeaning a = resolve_unit(*unit.lhs, system);
      UnitMeaning b = resolve_unit(*unit.rhs, system);
      if (unit.kind == UnitExpr::Kind::kProduct)
        return {a.dim + b.dim, Rational(a.scale * b.scale)};
      return {a.dim - b.dim, Rational(a.scale / b.scale)};
    }
  }
  throw InvalidArgument("malformed unit expression");
}

namespace {

template <Magnitude M>
void guard(const BasicQuantity<M>& q) {
  if constexpr (std::is_same_v<M, double>) {
    if (!std::isfinite(q.magnitude()))
      throw NumericOverflow("magnitude out of double range");
  } else {
    const Rational& r = q.magnitude();
    if (mpz_sizeinbase(r.get_num_mpz_t(), 2) > kMaxRationalBits ||
        mpz_sizeinbase(r.get_den_mpz_t(), 2) > kMaxRationalBits)
      throw NumericOverflow("exact magnitude too large");
  }
}

template <Magnitude M>
BasicQuantity<M> fold(const QuantityExpr& e, const UnitSystemPtr& system) {
  using K = QuantityExpr::Kind;
  BasicQuantity<M> result = BasicQuantity<M>::one(system);
  switch (e.kind) {
    case K::kLiteral: {
      Rational value = parse_rational(e.number);
      DimVector dim = DimVector::zero(system->rank());
      if (e.unit) {
        UnitMeaning meaning = resolve_unit(*e.unit, *system);
        value *= meaning.scale;
        dim = meaning.dim;
      }
      result = BasicQuantity<M>(from_rational<M>(value), dim, system);
      break;
    }
    case K::kParen: return fold<M>(*e.lhs, system);
    case K::kNeg: result = potential_neg(fold<M>(*e.lhs, system)); break;
    case K::kAdd:
      result = potential_add(fold<M>(*e.lhs, system), fold<M>(*e.rhs, system));
      break;
    case K::kSub:
      result = potential_sub(fold<M>(*e.lhs, system), fold<M>(*e.rhs, system));
      break;
    case K::kMul:
      result = potential_mul(fold<M>(*e.lhs, system), fold<M>(*e.rhs, system));
      break;
    case K::kDiv:
      result = potential_div(fold<M>(*e.lhs, system), fold<M>(*e.rhs, system));
      break;
    case K::kPow:
      result = potential_pow(fold<M>(*e.lhs, system), e.exponent);
      break;
  }
  guard(result);
  return result;
}

}  // namespace

template <Magnitude M>
BasicQuantity<M> evaluate(const QuantityExpr& expr, const UnitSystemPtr& system) {
  if (!system) throw InvalidArgument("no unit system");
  return fold<M>(expr, system);
}

template <Magnitude M>
BasicQuantity<M> evaluate(std::string_view input, const UnitSystemPtr& system) {
  auto expr = parse(input);
  return evaluate<M>(*expr, system);
}

template BasicQuantity<double> evaluate(const QuantityExpr&, const UnitSystemPtr&);
template BasicQuantity<Rational> evaluate(const QuantityExpr&,
                                          const UnitSystemPtr&);
template BasicQuantity<double> evaluate(std::string_view, const UnitSystemPtr&);
template BasicQuantity<Rational> evaluate(std::string_view, const UnitSystemPtr&);

}  // namespace dimjac::lang
