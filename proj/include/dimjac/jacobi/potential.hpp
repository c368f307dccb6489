#pragma once

#include "dimjac/jacobi/lichnerowicz.hpp"

namespace dimjac {

/// Section of the weight-m tensor power of the trivialized line bundle,
/// stored as its body F in the trivializing unit (the section is F u^m).
struct PotentialSection {
  int weight = 0;
  Polynomial body;

  bool operator==(const PotentialSection&) const = default;
};

/// Tensor product: weights add, bodies multiply.
PotentialSection operator*(const PotentialSection& a, const PotentialSection& b);
/// Addition within one weight; throws DimensionMismatch otherwise.
PotentialSection operator+(const PotentialSection& a, const PotentialSection& b);
PotentialSection operator-(const PotentialSection& a);

/// Bracket of dimension -1 on the potential of the trivial line bundle:
/// weight m + n - 1, body pi(dF, dG) + m F R[G] - n G R[F].
PotentialSection dimensioned_bracket(const LichnerowiczStructure& l,
                                     const PotentialSection& a,
                                     const PotentialSection& b);

}  // namespace dimjac
