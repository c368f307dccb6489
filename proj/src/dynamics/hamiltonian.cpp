#include "dimjac/dynamics/hamiltonian.hpp"

#include <cmath>

#include "dimjac/errors.hpp"
#include "dimjac/jacobi/polynomial_parser.hpp"

namespace dimjac {

ContactState::ContactState(std::vector<double> q, std::vector<double> p, double z)
    : q_(std::move(q)), p_(std::move(p)), z_(z) {
  if (q_.size() != p_.size())
    throw InvalidState("state has " + std::to_string(q_.size()) + " positions but " +
                       std::to_string(p_.size()) + " momenta");
  auto check = [](double x) {
    if (!std::isfinite(x)) throw InvalidState("state component is not finite");
  };
  for (double x : q_) check(x);
  for (double x : p_) check(x);
  check(z_);
}

ContactState ContactState::from_flat(std::span<const double> flat) {
  if (flat.size() % 2 == 0)
    throw InvalidState("state needs 2n+1 components, got " + std::to_string(flat.size()));
  std::size_t n = flat.size() / 2;
  return ContactState({flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(n)},
                      {flat.begin() + static_cast<std::ptrdiff_t>(n),
                       flat.begin() + static_cast<std::ptrdiff_t>(2 * n)},
                      flat.back());
}

std::vector<double> ContactState::flat() const {
  std::vector<double> out(q_);
  out.insert(out.end(), p_.begin(), p_.end());
  out.push_back(z_);
  return out;
}

std::vector<std::string> darboux_names(std::size_t dof) {
  if (dof == 1) return {"q", "p", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dof; ++i) names.push_back("q" + std::to_string(i));
  for (std::size_t i = 1; i <= dof; ++i) names.push_back("p" + std::to_string(i));
  names.push_back("z");
  return names;
}

HamiltonianSpec::HamiltonianSpec(std::size_t dof, Polynomial h)
    : dof_(dof), h_(std::move(h)), dz_(2 * dof + 1), names_(darboux_names(dof)) {
  std::size_t n = dimension();
  if (h_.nvars() != n)
    throw InvalidArgument("hamiltonian has " + std::to_string(h_.nvars()) +
                          " variables, expected " + std::to_string(n));
  if (!h_.is_polynomial())
    throw InvalidArgument("hamiltonian must not have negative powers");
  for (std::size_t i = 0; i < dof_; ++i) {
    dq_.push_back(h_.derivative(i));
    dp_.push_back(h_.derivative(dof_ + i));
  }
  dz_ = h_.derivative(2 * dof_);
  // dq/dt = dh/dp, dp/dt = -dh/dq - p dh/dz, dz/dt = p dh/dp - h.
  Polynomial dz_dt = -h_;
  for (std::size_t i = 0; i < dof_; ++i) field_.push_back(dp_[i]);
  for (std::size_t i = 0; i < dof_; ++i) {
    Polynomial p = Polynomial::variable(n, dof_ + i);
    field_.push_back(-dq_[i] - p * dz_);
    dz_dt += p * dp_[i];
  }
  field_.push_back(dz_dt);
}

HamiltonianSpec HamiltonianSpec::parse(std::size_t dof, std::string_view text) {
  auto names = darboux_names(dof);
  return HamiltonianSpec(dof, parse_polynomial(text, names));
}

double HamiltonianSpec::value(const ContactState& s) const {
  if (s.dof() != dof_)
    throw InvalidState("state has " + std::to_string(s.dof()) +
                       " degrees of freedom, hamiltonian has " + std::to_string(dof_));
  auto flat = s.flat();
  return h_.evaluate(std::span<const double>(flat));
}

double HamiltonianSpec::value(std::span<const double> flat) const {
  return h_.evaluate(flat);
}

double HamiltonianSpec::dz_value(std::span<const double> flat) const {
  return dz_.evaluate(flat);
}

ContactVelocity contact_vector_field(const HamiltonianSpec& h, const ContactState& s) {
  if (s.dof() != h.dof())
    throw InvalidState("state has " + std::to_string(s.dof()) +
                       " degrees of freedom, hamiltonian has " + std::to_string(h.dof()));
  auto flat = s.flat();
  std::span<const double> point(flat);
  ContactVelocity v;
  for (std::size_t i = 0; i < h.dof(); ++i) v.dq.push_back(h.field()[i].evaluate(point));
  for (std::size_t i = 0; i < h.dof(); ++i)
    v.dp.push_back(h.field()[h.dof() + i].evaluate(point));
  v.dz = h.field().back().evaluate(point);
  return v;
}

}  // namespace dimjac
