#include "dimjac/dynamics/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "dimjac/errors.hpp"

namespace dimjac {

namespace {

using Vec = std::vector<double>;

// One step of the chosen method for y' = f(y), f given by polynomials.
Vec step(const std::vector<Polynomial>& f, std::size_t count, const Vec& y,
         std::size_t point_size, double dt, Method method) {
  // Field components may read more coordinates than are stepped; the tail of
  // the evaluation point keeps y's trailing values (z for the reference).
  auto eval = [&](const Vec& x) {
    Vec out(count);
    for (std::size_t i = 0; i < count; ++i)
      out[i] = f[i].evaluate(std::span<const double>(x.data(), point_size));
    return out;
  };
  auto axpy = [&](const Vec& k, double a) {
    Vec out(y);
    for (std::size_t i = 0; i < count; ++i) out[i] = y[i] + a * k[i];
    return out;
  };
  Vec k1 = eval(y);
  if (method == Method::kEuler) return axpy(k1, dt);
  Vec k2 = eval(axpy(k1, dt / 2));
  Vec k3 = eval(axpy(k2, dt / 2));
  Vec k4 = eval(axpy(k3, dt));
  Vec out(y);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = y[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

bool in_range(const Vec& y) {
  return std::all_of(y.begin(), y.end(), [](double x) {
    return std::isfinite(x) && std::fabs(x) <= kOverflowLimit;
  });
}

// Finite-difference derivative of equally spaced values at index i.
double derivative(const std::vector<double>& h, std::size_t i, double dt) {
  std::size_t n = h.size();
  if (n < 2) return 0;
  if (n < 5) {
    if (i == 0) return (h[1] - h[0]) / dt;
    if (i == n - 1) return (h[n - 1] - h[n - 2]) / dt;
    return (h[i + 1] - h[i - 1]) / (2 * dt);
  }
  if (i >= 2 && i + 2 < n)
    return (h[i - 2] - 8 * h[i - 1] + 8 * h[i + 1] - h[i + 2]) / (12 * dt);
  if (i == 0)
    return (-25 * h[0] + 48 * h[1] - 36 * h[2] + 16 * h[3] - 3 * h[4]) / (12 * dt);
  if (i == 1)
    return (-3 * h[0] - 10 * h[1] + 18 * h[2] - 6 * h[3] + h[4]) / (12 * dt);
  if (i == n - 1)
    return (25 * h[n - 1] - 48 * h[n - 2] + 36 * h[n - 3] - 16 * h[n - 4] + 3 * h[n - 5]) /
           (12 * dt);
  return (3 * h[n - 1] + 10 * h[n - 2] - 18 * h[n - 3] + 6 * h[n - 4] - h[n - 5]) / (12 * dt);
}

std::vector<double> drift_residuals(const HamiltonianSpec& h, const Trajectory& traj) {
  std::vector<double> values;
  values.reserve(traj.samples.size());
  for (const auto& s : traj.samples) values.push_back(s.h);
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto flat = traj.samples[i].state.flat();
    double rate = derivative(values, i, traj.dt);
    out.push_back(std::fabs(rate + values[i] * h.dz_value(flat)));
  }
  return out;
}

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "rk4") return Method::kRk4;
  if (name == "euler") return Method::kEuler;
  throw InvalidArgument("unknown method '" + std::string(name) + "', expected rk4 or euler");
}

std::string_view method_name(Method m) { return m == Method::kRk4 ? "rk4" : "euler"; }

void IntegratorConfig::validate() const {
  if (!(dt > 0) || !std::isfinite(dt))
    throw InvalidArgument("time step must be positive and finite");
  if (steps <= 0) throw InvalidArgument("step count must be positive");
  if (!std::isfinite(dt * static_cast<double>(steps)))
    throw InvalidArgument("total time is not finite");
}

void Trajectory::require_complete() const {
  if (truncated) throw NumericOverflow(diagnostic);
}

Trajectory integrate(const HamiltonianSpec& h, const ContactState& s0,
                     const IntegratorConfig& cfg) {
  cfg.validate();
  if (s0.dof() != h.dof())
    throw InvalidState("state has " + std::to_string(s0.dof()) +
                       " degrees of freedom, hamiltonian has " + std::to_string(h.dof()));
  Trajectory traj;
  traj.dt = cfg.dt;
  std::size_t dim = h.dimension();
  Vec y = s0.flat();
  traj.samples.push_back({0.0, s0, h.value(std::span<const double>(y)), 0.0});
  for (long k = 1; k <= cfg.steps; ++k) {
    Vec next = step(h.field(), dim, y, dim, cfg.dt, cfg.method);
    double hv = in_range(next) ? h.value(std::span<const double>(next)) : 0.0;
    if (!in_range(next) || !std::isfinite(hv)) {
      traj.truncated = true;
      traj.diagnostic = "state left the range |x| <= 1e300 at step " + std::to_string(k) +
                        " (t = " + std::to_string(static_cast<double>(k) * cfg.dt) + ")";
      break;
    }
    y = std::move(next);
    traj.samples.push_back({static_cast<double>(k) * cfg.dt, ContactState::from_flat(y), hv, 0.0});
  }
  auto residuals = drift_residuals(h, traj);
  for (std::size_t i = 0; i < residuals.size(); ++i) traj.samples[i].drift = residuals[i];
  return traj;
}

double energy_drift(const HamiltonianSpec& h, const Trajectory& traj) {
  auto residuals = drift_residuals(h, traj);
  double worst = 0;
  for (double r : residuals) worst = std::max(worst, r);
  return worst;
}

std::vector<PhaseSample> symplectic_reference(const HamiltonianSpec& h,
                                              std::vector<double> q0,
                                              std::vector<double> p0,
                                              const IntegratorConfig& cfg) {
  cfg.validate();
  if (!h.z_invariant())
    throw NotZInvariant("hamiltonian depends on z: dh/dz = " +
                        h.dh_dz().to_string(h.names()));
  if (q0.size() != h.dof() || p0.size() != h.dof())
    throw InvalidState("initial point does not match " + std::to_string(h.dof()) +
                       " degrees of freedom");
  // For z-free h the (q, p) components of the contact field are Hamilton's
  // equations, and they never read z, which stays at zero here.
  std::size_t n = h.dof();
  Vec y(q0);
  y.insert(y.end(), p0.begin(), p0.end());
  y.push_back(0.0);
  std::vector<PhaseSample> out;
  out.push_back({0.0, q0, p0});
  for (long k = 1; k <= cfg.steps; ++k) {
    y = step(h.field(), 2 * n, y, 2 * n + 1, cfg.dt, cfg.method);
    if (!in_range(y))
      throw NumericOverflow("state left the range |x| <= 1e300 at step " + std::to_string(k));
    out.push_back({static_cast<double>(k) * cfg.dt,
                   {y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n)},
                   {y.begin() + static_cast<std::ptrdiff_t>(n),
                    y.begin() + static_cast<std::ptrdiff_t>(2 * n)}});
  }
  return out;
}

}  // namespace dimjac
