#pragma once

#include <cstdint>
#include <random>

#include "dimjac/jacobi/lichnerowicz.hpp"
#include "dimjac/jacobi/potential.hpp"
#include "dimjac/measurand/quantity.hpp"

namespace dimjac::verify {

using Rng = std::mt19937_64;

/// num/den with |num| <= max_num and 1 <= den <= max_den.
Rational random_rational(Rng& rng, long max_num = 9, long max_den = 5,
                         bool nonzero = false);
DimVector random_dim(Rng& rng, std::size_t rank, int max_exponent = 3);

/// Up to max_terms monomials of total degree <= max_degree.
Polynomial random_polynomial(Rng& rng, std::size_t n, int max_degree,
                             int max_terms = 4);
MultiVector random_multivector(Rng& rng, std::size_t n, int degree,
                               int max_coef_degree, int max_terms = 2);

/// Arbitrary pair; almost never Jacobi.
LichnerowiczStructure random_structure(Rng& rng, std::size_t n, int max_degree);
/// Poisson bivector g * (grad c) under the Hodge star on R^3, R = 0.
LichnerowiczStructure random_poisson3(Rng& rng);
/// Conformal change (a pi, pi#(da) + a R) of the Darboux pair on R^3.
LichnerowiczStructure random_conformal_darboux(Rng& rng);
/// A mix of the three families above on R^3 with coefficients of degree <= 2.
LichnerowiczStructure random_pair(Rng& rng, int index);

PotentialSection random_section(Rng& rng, std::size_t n, int min_weight,
                                int max_weight, int max_degree);

}  // namespace dimjac::verify
