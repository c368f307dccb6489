#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dimjac/jacobi/polynomial.hpp"

namespace dimjac {

/// Point in Darboux coordinates (q^1..q^n, p_1..p_n, z). Components must be
/// finite; q and p must have equal length. Throws InvalidState otherwise.
class ContactState {
 public:
  ContactState(std::vector<double> q, std::vector<double> p, double z);
  /// Splits a flat (q, p, z) vector of odd length.
  static ContactState from_flat(std::span<const double> flat);

  std::size_t dof() const { return q_.size(); }
  const std::vector<double>& q() const { return q_; }
  const std::vector<double>& p() const { return p_; }
  double z() const { return z_; }
  /// (q, p, z) in chart order.
  std::vector<double> flat() const;

  bool operator==(const ContactState&) const = default;

 private:
  std::vector<double> q_, p_;
  double z_;
};

/// Velocity (dq/dt, dp/dt, dz/dt); unlike ContactState it may hold any value.
struct ContactVelocity {
  std::vector<double> dq, dp;
  double dz = 0;
};

/// Contact Hamiltonian h(q, p, z) on the chart of dimension 2n+1, with exact
/// partials and the exact right-hand sides of the contact equations
///   dq/dt = dh/dp,  dp/dt = -dh/dq - p dh/dz,  dz/dt = p dh/dp - h.
class HamiltonianSpec {
 public:
  /// h must live in 2 dof + 1 variables; throws InvalidArgument otherwise.
  HamiltonianSpec(std::size_t dof, Polynomial h);
  /// Parses h over the Darboux names of the chart.
  static HamiltonianSpec parse(std::size_t dof, std::string_view text);

  std::size_t dof() const { return dof_; }
  std::size_t dimension() const { return 2 * dof_ + 1; }
  const Polynomial& h() const { return h_; }
  const Polynomial& dh_dq(std::size_t i) const { return dq_[i]; }
  const Polynomial& dh_dp(std::size_t i) const { return dp_[i]; }
  const Polynomial& dh_dz() const { return dz_; }
  bool z_invariant() const { return dz_.is_zero(); }

  /// Exact right-hand sides in chart order (q, p, z).
  const std::vector<Polynomial>& field() const { return field_; }
  /// Names q, p, z for one degree of freedom, else q1.., p1.., z.
  const std::vector<std::string>& names() const { return names_; }

  double value(const ContactState& s) const;
  double value(std::span<const double> flat) const;
  double dz_value(std::span<const double> flat) const;

 private:
  std::size_t dof_;
  Polynomial h_;
  std::vector<Polynomial> dq_, dp_;
  Polynomial dz_;
  std::vector<Polynomial> field_;
  std::vector<std::string> names_;
};

/// Darboux chart names used by HamiltonianSpec.
std::vector<std::string> darboux_names(std::size_t dof);

ContactVelocity contact_vector_field(const HamiltonianSpec& h, const ContactState& s);

}  // namespace dimjac
