#pragma once

#include "dimjac/jacobi/lichnerowicz.hpp"

namespace dimjac {

/// Product Jacobi structure on M1 x M2 x R^x with coordinates
/// (x_1..x_n1, y_1..y_n2, t), where t is the ratio u1/u2 of the two
/// trivializing units:
///   pi = pi1 + t pi2 + (t^2 R2 - t R1)∧∂t,   R = R1.
/// Coefficients are Laurent in t only. Throws NotJacobi when a factor is not
/// a Jacobi pair.
LichnerowiczStructure product_jacobi(const LichnerowiczStructure& l1,
                                     const LichnerowiczStructure& l2);

/// Pullback of a section of the first factor: t-free.
Polynomial pullback_first(const Polynomial& s, std::size_t n1, std::size_t n2);
/// Pullback of a section of the second factor: s(y) t^-1.
Polynomial pullback_second(const Polynomial& s, std::size_t n1, std::size_t n2);
/// Pullback of a function of the first or second base.
Polynomial base_function_first(const Polynomial& f, std::size_t n1, std::size_t n2);
Polynomial base_function_second(const Polynomial& f, std::size_t n1, std::size_t n2);
/// Ratio function a/b for a section a of the first factor and a nonzero
/// constant section b of the second: a(x) t / b.
Polynomial ratio_first_second(const Polynomial& a, const Rational& b,
                              std::size_t n1, std::size_t n2);
/// Ratio function b/a for a section b of the second factor and a nonzero
/// constant section a of the first: b(y) t^-1 / a.
Polynomial ratio_second_first(const Polynomial& b, const Rational& a,
                              std::size_t n1, std::size_t n2);

}  // namespace dimjac
