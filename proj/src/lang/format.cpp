#include "dimjac/lang/format.hpp"

namespace dimjac::lang {

namespace {

std::string power_text(const std::string& symbol, int exponent) {
  return exponent == 1 ? symbol : symbol + "^" + std::to_string(exponent);
}

// Magnitudes must survive the lexer: a negative sign becomes unary minus.
template <Magnitude M>
std::string number_text(const M& m) {
  return magnitude_text(m);
}

}  // namespace

std::string base_unit_text(const UnitSystem& system, const DimVector& dim) {
  std::string positive, negative;
  for (std::size_t i = 0; i < dim.rank(); ++i) {
    int e = dim[i];
    if (e <= 0) continue;
    if (!positive.empty()) positive += "·";
    positive += power_text(system.base()[i].symbol, e);
  }
  for (std::size_t i = 0; i < dim.rank(); ++i) {
    int e = dim[i];
    if (e >= 0) continue;
    if (positive.empty()) {
      if (!negative.empty()) negative += "·";
      negative += power_text(system.base()[i].symbol, 1) + "^" +
                  std::to_string(e);
    } else {
      negative += "/" + power_text(system.base()[i].symbol, -e);
    }
  }
  return positive + negative;
}

template <Magnitude M>
std::string format_quantity(const BasicQuantity<M>& q, FormatStyle style) {
  const UnitSystem& system = *q.system();
  const DimVector& dim = q.dim();
  if (dim.is_zero()) return number_text(q.magnitude());
  if (style == FormatStyle::kCanonical) {
    int nonzero = 0, total = 0;
    for (std::size_t i = 0; i < dim.rank(); ++i) {
      if (dim[i] != 0) ++nonzero;
      total += dim[i];
    }
    bool single_axis = nonzero == 1 && total == 1;
    if (!single_axis) {
      for (const DerivedUnit& unit : system.derived()) {
        if (unit.dim != dim) continue;
        M value = scale_exact(q.magnitude(), Rational(1 / unit.scale));
        return number_text(value) + " " + unit.symbol;
      }
    }
  }
  return number_text(q.magnitude()) + " " + base_unit_text(system, dim);
}

template std::string format_quantity(const BasicQuantity<double>&, FormatStyle);
template std::string format_quantity(const BasicQuantity<Rational>&,
                                     FormatStyle);

}  // namespace dimjac::lang
