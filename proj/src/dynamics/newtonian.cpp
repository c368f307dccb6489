#include "dimjac/dynamics/newtonian.hpp"

#include <numeric>

#include "dimjac/errors.hpp"

namespace dimjac {

namespace {

void require_square(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidArgument("matrix is not square");
}

// Determinant by exact elimination.
Rational determinant(RationalMatrix a) {
  std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m);
  std::size_t n = m.size();
  RationalMatrix a(m);
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("mass matrix is singular");
    std::swap(a[pivot], a[c]);
    std::swap(inv[pivot], inv[c]);
    Rational scale = 1 / a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= scale;
      inv[c][k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

HamiltonianSpec newtonian_energy(const RationalMatrix& mass, const Polynomial& v) {
  require_square(mass);
  std::size_t n = mass.size();
  if (n == 0) throw InvalidArgument("mass matrix is empty");
  if (v.nvars() != n)
    throw InvalidArgument("potential has " + std::to_string(v.nvars()) +
                          " variables, expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mass[i][j] != mass[j][i]) throw InvalidArgument("mass matrix is not symmetric");
  if (determinant(mass) == 0) throw SingularMatrix("mass matrix is singular");
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix minor(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = mass[i][j];
    if (determinant(minor) <= 0)
      throw InvalidArgument("mass matrix is not positive definite");
  }
  RationalMatrix inv = inverse(mass);
  std::size_t dim = 2 * n + 1;
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  Polynomial h = v.embed(dim, positions);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (inv[i][j] == 0) continue;
      h += Polynomial::variable(dim, n + i) * Polynomial::variable(dim, n + j) *
           (inv[i][j] / 2);
    }
  return HamiltonianSpec(n, h);
}

}  // namespace dimjac
