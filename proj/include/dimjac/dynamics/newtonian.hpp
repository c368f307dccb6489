#pragma once

#include <vector>

#include "dimjac/dynamics/hamiltonian.hpp"

namespace dimjac {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix, or
/// InvalidArgument for a non-square matrix.
RationalMatrix inverse(const RationalMatrix& m);

/// h = 1/2 p^T M^-1 p + V(q). V lives in the n position variables. Throws
/// InvalidArgument unless M is symmetric positive definite, SingularMatrix
/// when M is singular.
HamiltonianSpec newtonian_energy(const RationalMatrix& mass, const Polynomial& v);

}  // namespace dimjac
