#pragma once

#include <string>
#include <vector>

#include "dimjac/dynamics/hamiltonian.hpp"

namespace dimjac {

enum class Method { kRk4, kEuler };

/// Parses "rk4" or "euler"; throws InvalidArgument otherwise.
Method parse_method(std::string_view name);
std::string_view method_name(Method m);

struct IntegratorConfig {
  double dt = 1e-3;
  long steps = 1000;
  Method method = Method::kRk4;

  /// Throws InvalidArgument unless dt > 0, steps > 0 and dt * steps is finite.
  void validate() const;
};

struct Sample {
  double t;
  ContactState state;
  double h;
  /// |dh/dt + h dh/dz| with dh/dt from finite differences of the samples.
  double drift;
};

struct Trajectory {
  double dt = 0;
  std::vector<Sample> samples;
  /// Set when a step left the finite range below 1e300; samples stop at the
  /// last good state and `diagnostic` says why.
  bool truncated = false;
  std::string diagnostic;

  /// Throws NumericOverflow when truncated.
  void require_complete() const;
};

/// Components above this magnitude end the integration.
inline constexpr double kOverflowLimit = 1e300;

Trajectory integrate(const HamiltonianSpec& h, const ContactState& s0,
                     const IntegratorConfig& cfg);

/// Maximum over samples of |dh/dt + h dh/dz|, dh/dt by fourth-order finite
/// differences (lower order when fewer than five samples exist).
double energy_drift(const HamiltonianSpec& h, const Trajectory& traj);

struct PhaseSample {
  double t;
  std::vector<double> q, p;
};

/// Hamilton's equations dq/dt = dh/dp, dp/dt = -dh/dq for z-free h, stepped
/// with the same arithmetic as integrate. Throws NotZInvariant.
std::vector<PhaseSample> symplectic_reference(const HamiltonianSpec& h,
                                              std::vector<double> q0,
                                              std::vector<double> p0,
                                              const IntegratorConfig& cfg);

}  // namespace dimjac
