#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dimjac/jacobi/multivector.hpp"

namespace dimjac {

/// Bivector pi and vector field R on an n-dimensional chart, with variable
/// names used for rendering and parsing. Nothing is assumed about the pair;
/// use is_jacobi_pair.
class LichnerowiczStructure {
 public:
  LichnerowiczStructure(MultiVector pi, MultiVector r,
                        std::vector<std::string> names = {});

  static LichnerowiczStructure zero(std::size_t n,
                                    std::vector<std::string> names = {});

  std::size_t dimension() const noexcept { return pi_.dimension(); }
  const MultiVector& pi() const noexcept { return pi_; }
  const MultiVector& r() const noexcept { return r_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  Polynomial variable(std::size_t i) const {
    return Polynomial::variable(dimension(), i);
  }
  Polynomial parse(std::string_view text) const;

  bool operator==(const LichnerowiczStructure& other) const {
    return pi_ == other.pi_ && r_ == other.r_;
  }

 private:
  MultiVector pi_;
  MultiVector r_;
  std::vector<std::string> names_;
};

struct JacobiCheck {
  bool ok = true;
  /// Empty when ok; otherwise the first nonzero component, e.g. "2 ∂z∧∂q∧∂p".
  std::string witness;
  /// Which identity failed: "[pi,pi]+2R^pi" or "[R,pi]".
  std::string identity;
};

/// Checks [pi,pi] + 2 R∧pi = 0, then [R,pi] = 0, exactly.
JacobiCheck is_jacobi_pair(const LichnerowiczStructure& l);

/// pi(df, dg) + f R[g] - g R[f].
Polynomial jacobi_bracket(const LichnerowiczStructure& l, const Polynomial& f,
                          const Polynomial& g);

/// X_f = pi#(df) + f R, with pi#(df)[g] = pi(df, dg).
MultiVector hamiltonian_vf(const LichnerowiczStructure& l, const Polynomial& f);

/// pi(df, dg).
Polynomial bivector_pairing(const LichnerowiczStructure& l, const Polynomial& f,
                            const Polynomial& g);

/// Darboux pair on (q_1..q_n, p_1..p_n, z):
/// pi = sum_i ∂p_i∧(∂q_i + p_i ∂z), R = -∂z. Its Hamiltonian fields are the
/// contact equations of motion. Names are q,p,z for n = 1.
LichnerowiczStructure canonical_darboux(std::size_t n);

/// Constant symplectic pair on (q_1..q_n, p_1..p_n): pi = sum ∂q_i∧∂p_i, R = 0.
LichnerowiczStructure canonical_symplectic(std::size_t n);

struct ConditionResult {
  bool ok = true;
  std::string witness;
};

/// The four symbol/squiggle compatibility conditions for the trivial line
/// bundle with spanning section 1, each checked on a monomial probe set.
struct ExtensionReport {
  std::array<ConditionResult, 4> conditions;
  bool all() const {
    for (const auto& c : conditions)
      if (!c.ok) return false;
    return true;
  }
};

ExtensionReport check_extension_conditions(const LichnerowiczStructure& l);

/// All monomials of total degree <= max_degree in n variables.
std::vector<Polynomial> monomial_probes(std::size_t n, int max_degree);

/// Probe degree for a structure: max(2, largest coefficient degree + 1).
int probe_degree(const LichnerowiczStructure& l);

}  // namespace dimjac
