#include "dimjac/jacobi/potential.hpp"

#include "dimjac/errors.hpp"

namespace dimjac {

PotentialSection operator*(const PotentialSection& a, const PotentialSection& b) {
  return {a.weight + b.weight, a.body * b.body};
}

PotentialSection operator+(const PotentialSection& a, const PotentialSection& b) {
  if (a.weight != b.weight)
    throw DimensionMismatch("cannot add sections of weights " +
                            std::to_string(a.weight) + " and " +
                            std::to_string(b.weight));
  return {a.weight, a.body + b.body};
}

PotentialSection operator-(const PotentialSection& a) { return {a.weight, -a.body}; }

PotentialSection dimensioned_bracket(const LichnerowiczStructure& l,
                                     const PotentialSection& a,
                                     const PotentialSection& b) {
  const Polynomial& f = a.body;
  const Polynomial& g = b.body;
  Polynomial body = bivector_pairing(l, f, g) +
                    f * l.r().apply(g) * Rational(a.weight) -
                    g * l.r().apply(f) * Rational(b.weight);
  return {a.weight + b.weight - 1, body};
}

}  // namespace dimjac
