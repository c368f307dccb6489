#pragma once

#include <concepts>
#include <string>
#include <type_traits>

#include "dimjac/measurand/rational.hpp"

namespace dimjac {

/// The two magnitude modes: exact rationals and IEEE doubles. A computation
/// runs entirely in one mode; the type parameter makes mixing a compile error.
template <class M>
concept Magnitude = std::same_as<M, Rational> || std::same_as<M, double>;

template <Magnitude M>
M from_rational(const Rational& r) {
  if constexpr (std::is_same_v<M, double>)
    return to_double(r);
  else
    return r;
}

template <Magnitude M>
bool is_zero(const M& m) {
  return m == 0;
}

/// m * factor with a single rounding in double mode.
template <Magnitude M>
M scale_exact(const M& m, const Rational& factor) {
  if constexpr (std::is_same_v<M, double>)
    return to_double(exact_rational(m) * factor);
  else
    return Rational(m * factor);
}

template <Magnitude M>
std::string magnitude_text(const M& m) {
  if constexpr (std::is_same_v<M, double>)
    return format_double(m);
  else
    return to_string(m);
}

}  // namespace dimjac
