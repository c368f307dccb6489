#include "dimjac/verify/random.hpp"

namespace dimjac::verify {

Rational random_rational(Rng& rng, long max_num, long max_den, bool nonzero) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  for (;;) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

DimVector random_dim(Rng& rng, std::size_t rank, int max_exponent) {
  std::uniform_int_distribution<int> e(-max_exponent, max_exponent);
  std::vector<int> exps(rank);
  for (int& x : exps) x = e(rng);
  return DimVector(std::move(exps));
}

Polynomial random_polynomial(Rng& rng, std::size_t n, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms), degree(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n == 0 ? 0 : n - 1);
  Polynomial p(n);
  int terms = count(rng);
  for (int k = 0; k < terms; ++k) {
    Exponents e(n, 0);
    int d = n == 0 ? 0 : degree(rng);
    for (int i = 0; i < d; ++i) e[var(rng)] += 1;
    p += Polynomial::monomial(n, e, random_rational(rng, 5, 3, true));
  }
  return p;
}

MultiVector random_multivector(Rng& rng, std::size_t n, int degree,
                               int max_coef_degree, int max_terms) {
  MultiVector m(n, degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  int terms = count(rng);
  for (int k = 0; k < terms; ++k) {
    std::vector<std::size_t> idx;
    for (int d = 0; d < degree; ++d) idx.push_back(var(rng));
    m = m + MultiVector::basis(n, idx, random_polynomial(rng, n, max_coef_degree, 2));
  }
  return m;
}

LichnerowiczStructure random_structure(Rng& rng, std::size_t n, int max_degree) {
  return LichnerowiczStructure(random_multivector(rng, n, 2, max_degree, 3),
                               random_multivector(rng, n, 1, max_degree, 2));
}

LichnerowiczStructure random_poisson3(Rng& rng) {
  const std::size_t n = 3;
  Polynomial g = random_polynomial(rng, n, 1, 2);
  Polynomial c = random_polynomial(rng, n, 2, 3);
  // pi^{ij} = eps^{ijk} g dc/dx_k on the increasing pairs (0,1), (0,2), (1,2).
  MultiVector pi(n, 2);
  const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const std::size_t third[3] = {2, 1, 0};
  const int sign[3] = {1, -1, 1};
  for (int k = 0; k < 3; ++k)
    pi = pi + MultiVector::basis(n, pairs[k],
                                 g * c.derivative(third[k]) * Rational(sign[k]));
  return LichnerowiczStructure(pi, MultiVector(n, 1), {"x", "y", "z"});
}

LichnerowiczStructure random_conformal_darboux(Rng& rng) {
  LichnerowiczStructure d = canonical_darboux(1);
  Polynomial a = random_polynomial(rng, 3, 1, 3);
  if (a.is_zero()) a = Polynomial::constant(3, Rational(1));
  return LichnerowiczStructure(d.pi() * a, hamiltonian_vf(d, a), d.names());
}

LichnerowiczStructure random_pair(Rng& rng, int index) {
  switch (index % 3) {
    case 0: return random_poisson3(rng);
    case 1: return random_conformal_darboux(rng);
    default: {
      auto l = random_structure(rng, 3, 2);
      return LichnerowiczStructure(l.pi(), l.r(), {"x", "y", "z"});
    }
  }
}

PotentialSection random_section(Rng& rng, std::size_t n, int min_weight,
                                int max_weight, int max_degree) {
  std::uniform_int_distribution<int> w(min_weight, max_weight);
  return {w(rng), random_polynomial(rng, n, max_degree, 3)};
}

}  // namespace dimjac::verify
