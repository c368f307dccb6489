#pragma once

#include <string>
#include <vector>

#include "dimjac/jacobi/lichnerowicz.hpp"

namespace dimjac {

/// Coordinate subspace S = {x_i = 0 : i in zero_set}.
struct CoordinateSubspace {
  std::vector<std::size_t> zero_set;

  /// Whether f lies in the vanishing ideal of S.
  bool vanishes_on(const Polynomial& f) const;
};

struct CoisotropicCheck {
  bool ok = true;
  /// e.g. "X_{q2} = ∂p2 not tangent" or "{q1,q2} = 1 does not vanish".
  std::string witness;
};

/// Hamiltonian fields of the generators x_i (i in Z) must be tangent to S
/// and their brackets must vanish on S.
CoisotropicCheck is_coisotropic(const LichnerowiczStructure& l,
                                const CoordinateSubspace& s);

}  // namespace dimjac
