#pragma once

#include <string>

#include "dimjac/measurand/quantity.hpp"

namespace dimjac::lang {

enum class FormatStyle {
  kBase,       // base unit symbols only, e.g. "6 atm·L/mol"
  kCanonical,  // a registered derived unit of exactly this dimension if any
};

/// "MAG UNIT": positive exponents first in base order joined by '·', then
/// "/SYM^e" for each negative exponent. A dimensionless quantity renders as
/// the bare magnitude. The text parses and evaluates back to q (exactly in
/// rational mode).
template <Magnitude M>
std::string format_quantity(const BasicQuantity<M>& q,
                            FormatStyle style = FormatStyle::kCanonical);

/// Unit part of the base-style rendering; empty when dimensionless.
std::string base_unit_text(const UnitSystem& system, const DimVector& dim);

}  // namespace dimjac::lang
