#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dimjac/jacobi/polynomial.hpp"

namespace dimjac {

/// Multivector field of fixed degree on an n-dimensional chart. Components
/// are stored on strictly increasing index tuples, encoded as bitmasks.
/// A degree above n is allowed and denotes the zero multivector.
class MultiVector {
 public:
  using Mask = std::uint32_t;
  static constexpr std::size_t kMaxDimension = 31;

  MultiVector(std::size_t n, int degree);

  static MultiVector function(const Polynomial& f);
  /// Vector field with the given components (one per coordinate).
  static MultiVector vector_field(std::span<const Polynomial> components);
  /// f * (d/dx_{i1} ^ ... ^ d/dx_{id}) for any order of indices; the sign of
  /// the sorting permutation is applied. Repeated indices give zero.
  static MultiVector basis(std::size_t n, std::span<const std::size_t> indices,
                           const Polynomial& f);

  std::size_t dimension() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const std::map<Mask, Polynomial>& components() const noexcept {
    return components_;
  }
  /// Component on the sorted tuple `mask` (zero if absent).
  Polynomial component(Mask mask) const;
  /// Component on an arbitrary index tuple, with antisymmetry applied.
  Polynomial component(std::span<const std::size_t> indices) const;
  bool is_zero() const noexcept { return components_.empty(); }

  MultiVector operator+(const MultiVector& other) const;
  MultiVector operator-(const MultiVector& other) const;
  MultiVector operator-() const;
  MultiVector operator*(const Polynomial& f) const;
  MultiVector operator*(const Rational& c) const;

  /// Applies a vector field to a function: X[f].
  Polynomial apply(const Polynomial& f) const;

  /// Value on the differentials df_1, ..., df_d (fully antisymmetric).
  Polynomial evaluate(std::span<const Polynomial> functions) const;

  /// Contraction with df in the first slot: (iota_df A)(dg_2, ...) =
  /// A(df, dg_2, ...). For a bivector this is pi-sharp.
  MultiVector contract(const Polynomial& f) const;

  /// Re-embeds into a chart of dimension n; coordinate i goes to map[i].
  MultiVector embed(std::size_t n, std::span<const std::size_t> map) const;

  /// "2 ∂z∧∂q∧∂p + p ∂q" style rendering, components in mask order.
  std::string to_string(std::span<const std::string> names) const;
  /// One component rendered the same way.
  static std::string term_string(Mask mask, const Polynomial& coefficient,
                                 std::span<const std::string> names);

  bool operator==(const MultiVector& other) const = default;

 private:
  friend MultiVector wedge(const MultiVector& a, const MultiVector& b);
  friend MultiVector schouten(const MultiVector& a, const MultiVector& b);
  void add(Mask mask, const Polynomial& f);

  std::size_t n_;
  int degree_;
  std::map<Mask, Polynomial> components_;
};

/// Exterior product. Throws DegreeOverflow when the degree would exceed n.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

/// Schouten bracket, graded so that on vector fields it is the commutator
/// [X, Y] = XY - YX and [pi, pi](df, dg, dh) = 2 sum_cyc pi(df, d pi(dg, dh)).
/// When the formal degree exceeds n the result is the zero multivector of
/// degree n; a formal degree below zero yields the zero function.
MultiVector schouten(const MultiVector& a, const MultiVector& b);

int popcount(MultiVector::Mask mask);

}  // namespace dimjac
