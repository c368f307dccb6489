#include "dimjac/jacobi/coisotropic.hpp"

#include <bit>

#include "dimjac/errors.hpp"

namespace dimjac {

bool CoordinateSubspace::vanishes_on(const Polynomial& f) const {
  return f.substitute_zero(zero_set).is_zero();
}

CoisotropicCheck is_coisotropic(const LichnerowiczStructure& l,
                                const CoordinateSubspace& s) {
  const auto& names = l.names();
  for (std::size_t i : s.zero_set)
    if (i >= l.dimension())
      throw InvalidArgument("coordinate index " + std::to_string(i) +
                            " out of range");
  for (std::size_t i : s.zero_set) {
    MultiVector x = hamiltonian_vf(l, l.variable(i));
    for (std::size_t k : s.zero_set) {
      if (s.vanishes_on(x.apply(l.variable(k)))) continue;
      MultiVector restricted(l.dimension(), 1);
      for (const auto& [mask, f] : x.components()) {
        const std::size_t index[] = {static_cast<std::size_t>(std::countr_zero(mask))};
        restricted = restricted +
                     MultiVector::basis(l.dimension(), index, f.substitute_zero(s.zero_set));
      }
      return {false, "X_{" + names[i] + "} = " + restricted.to_string(names) +
                         " not tangent"};
    }
  }
  for (std::size_t a = 0; a < s.zero_set.size(); ++a)
    for (std::size_t b = a + 1; b < s.zero_set.size(); ++b) {
      std::size_t i = s.zero_set[a], j = s.zero_set[b];
      Polynomial br = jacobi_bracket(l, l.variable(i), l.variable(j));
      if (!s.vanishes_on(br))
        return {false, "{" + names[i] + "," + names[j] + "} = " +
                           br.to_string(names) + " does not vanish"};
    }
  return {};
}

}  // namespace dimjac
