#pragma once

#include <iosfwd>
#include <string>

#include "dimjac/dynamics/integrator.hpp"
#include "dimjac/measurand/rational.hpp"

namespace dimjac {

/// Columns t, q_1..q_n, p_1..p_n, z, h, drift.
void write_csv(std::ostream& out, const Trajectory& traj);
/// Line chart of h(t) and z(t).
void write_svg(std::ostream& out, const Trajectory& traj);

}  // namespace dimjac
