#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"

#include "dimjac/dynamics/hamiltonian.hpp"
#include "dimjac/dynamics/integrator.hpp"
#include "dimjac/dynamics/newtonian.hpp"
#include "dimjac/dynamics/output.hpp"
#include "dimjac/errors.hpp"
#include "dimjac/jacobi/lichnerowicz.hpp"
#include "dimjac/jacobi/polynomial_parser.hpp"
#include "dimjac/verify/random.hpp"

using namespace dimjac;

namespace {

HamiltonianSpec H(std::string_view text, std::size_t dof = 1) {
  return HamiltonianSpec::parse(dof, text);
}

ContactState S(double q, double p, double z) { return ContactState({q}, {p}, z); }

IntegratorConfig cfg(double dt, long steps, Method m = Method::kRk4) {
  return IntegratorConfig{dt, steps, m};
}

double max_error(const ContactState& s, double q, double p, double z) {
  return std::max({std::fabs(s.q()[0] - q), std::fabs(s.p()[0] - p), std::fabs(s.z() - z)});
}

// Closed form for h = z: p and z decay as exp(-t), q stays put.
double h_z_error(double dt, long steps) {
  auto traj = integrate(H("z"), S(0, 1, 1), cfg(dt, steps));
  double e = std::exp(-dt * static_cast<double>(steps));
  return max_error(traj.samples.back().state, 0, e, e);
}

}  // namespace

TEST_CASE("contact states reject bad components") {
  CHECK_THROWS_AS(ContactState({1.0}, {}, 0.0), InvalidState);
  CHECK_THROWS_AS(ContactState({NAN}, {1.0}, 0.0), InvalidState);
  CHECK_THROWS_AS(ContactState({0.0}, {1.0}, INFINITY), InvalidState);
  const double even[] = {1.0, 2.0};
  CHECK_THROWS_AS(ContactState::from_flat(even), InvalidState);
  const double odd[] = {1.0, 2.0, 3.0, 4.0, 5.0};
  auto s = ContactState::from_flat(odd);
  CHECK(s.q() == std::vector<double>{1.0, 2.0});
  CHECK(s.p() == std::vector<double>{3.0, 4.0});
  CHECK(s.z() == 5.0);
}

TEST_CASE("hamiltonian spec") {
  auto h = H("q^2 p + z p");
  CHECK(h.dh_dq(0) == parse_polynomial("2 q p", h.names()));
  CHECK(h.dh_dp(0) == parse_polynomial("q^2 + z", h.names()));
  CHECK(h.dh_dz() == parse_polynomial("p", h.names()));
  CHECK_FALSE(h.z_invariant());
  CHECK(H("p^2/2").z_invariant());
  CHECK(H("q1 p2 + z", 2).names() ==
        std::vector<std::string>{"q1", "q2", "p1", "p2", "z"});
  CHECK_THROWS_AS(HamiltonianSpec(1, Polynomial(2)), InvalidArgument);
  CHECK_THROWS_AS(H("q^-1"), InvalidArgument);
  CHECK_THROWS_AS(H("w"), ParseError);
}

TEST_CASE("contact vector field examples") {
  auto v = contact_vector_field(H("z"), S(0, 1, 1));
  CHECK(v.dq[0] == 0.0);
  CHECK(v.dp[0] == -1.0);
  CHECK(v.dz == -1.0);
  v = contact_vector_field(H("p^2/2"), S(0, 1, 0));
  CHECK(v.dq[0] == 1.0);
  CHECK(v.dp[0] == 0.0);
  CHECK(v.dz == 0.5);
  v = contact_vector_field(H("0"), S(3, -2, 7));
  CHECK(v.dq[0] == 0.0);
  CHECK(v.dp[0] == 0.0);
  CHECK(v.dz == 0.0);
  CHECK_THROWS_AS(contact_vector_field(H("z", 2), S(0, 1, 1)), InvalidState);
}

TEST_CASE("contact field is the hamiltonian field of the darboux pair") {
  verify::Rng rng(21);
  for (std::size_t dof : {1, 2}) {
    auto pair = canonical_darboux(dof);
    for (int i = 0; i < 25; ++i) {
      auto h = verify::random_polynomial(rng, 2 * dof + 1, 3, 5);
      HamiltonianSpec spec(dof, h);
      auto x = hamiltonian_vf(pair, h);
      for (std::size_t k = 0; k < spec.dimension(); ++k) {
        const std::size_t idx[] = {k};
        CHECK(spec.field()[k] == x.component(idx));
      }
    }
  }
}

TEST_CASE("free particle matches the closed form") {
  auto traj = integrate(H("p^2/2"), S(0, 1, 0), cfg(1e-3, 1000));
  REQUIRE(traj.samples.size() == 1001);
  CHECK_FALSE(traj.truncated);
  CHECK(max_error(traj.samples.back().state, 1.0, 1.0, 0.5) < 1e-10);
  CHECK(traj.samples.back().t == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < traj.samples.size(); ++i)
    CHECK(traj.samples[i].t > traj.samples[i - 1].t);
}

TEST_CASE("h = z decays exponentially") {
  CHECK(h_z_error(1e-3, 1000) < 1e-9);
  auto traj = integrate(H("z"), S(0, 1, 1), cfg(1e-3, 1000));
  CHECK(energy_drift(H("z"), traj) < 1e-6);
}

TEST_CASE("zero hamiltonian gives a constant trajectory") {
  auto traj = integrate(H("0"), S(0.25, -1.5, 2), cfg(0.1, 50));
  for (const auto& s : traj.samples) {
    CHECK(s.state == S(0.25, -1.5, 2));
    CHECK(s.drift == 0.0);
  }
  CHECK(energy_drift(H("0"), traj) == 0.0);
  CHECK(energy_drift(H("3"), integrate(H("3"), S(1, 1, 1), cfg(0.1, 10))) == 0.0);
}

TEST_CASE("rk4 error shrinks sixteenfold when dt halves") {
  double coarse = h_z_error(0.1, 10), fine = h_z_error(0.05, 20);
  CHECK(coarse / fine > 14.0);
  CHECK(coarse / fine < 18.0);
  // Euler is first order.
  auto euler = [](double dt, long steps) {
    auto t = integrate(H("z"), S(0, 1, 1), cfg(dt, steps, Method::kEuler));
    double e = std::exp(-1.0);
    return max_error(t.samples.back().state, 0, e, e);
  };
  double ratio = euler(0.01, 100) / euler(0.005, 200);
  CHECK(ratio > 1.8);
  CHECK(ratio < 2.2);
}

TEST_CASE("drift residual shrinks at the method order") {
  auto h = H("q^2 p + z^2/2 - p z");
  auto drift = [&](double dt) {
    return energy_drift(h, integrate(h, S(0.3, 0.2, 0.1), cfg(dt, static_cast<long>(1 / dt))));
  };
  double ratio = drift(0.02) / drift(0.01);
  CHECK(ratio > 12.0);
  auto oscillator = H("(q^2 + p^2)/2");
  auto conserved = [&](double dt) {
    return energy_drift(oscillator,
                        integrate(oscillator, S(1, 0, 0), cfg(dt, static_cast<long>(1 / dt))));
  };
  CHECK(conserved(0.01) < 1e-9);
  CHECK(conserved(0.02) / conserved(0.01) > 12.0);
}

TEST_CASE("reduction to the symplectic reference") {
  verify::Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    // z-free random h in (q, p) embedded into the contact chart.
    auto base = verify::random_polynomial(rng, 2, 2, 4);
    const std::size_t map[] = {0, 1};
    HamiltonianSpec spec(1, base.embed(3, map));
    auto c = cfg(1e-2, 50);
    auto contact = integrate(spec, S(0.1, -0.2, 0.7), c);
    auto ref = symplectic_reference(spec, {0.1}, {-0.2}, c);
    if (contact.truncated) continue;
    REQUIRE(ref.size() == contact.samples.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
      CHECK(std::fabs(ref[k].q[0] - contact.samples[k].state.q()[0]) <= 1e-12);
      CHECK(std::fabs(ref[k].p[0] - contact.samples[k].state.p()[0]) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(symplectic_reference(H("z"), {0}, {1}, cfg(0.1, 1)), NotZInvariant);
}

TEST_CASE("symplectic reference examples") {
  auto free = symplectic_reference(H("p^2/2"), {0}, {1}, cfg(1e-3, 1000));
  CHECK(std::fabs(free.back().q[0] - 1.0) < 1e-10);
  CHECK(std::fabs(free.back().p[0] - 1.0) < 1e-12);
  long steps = 6283;
  double dt = 2 * std::numbers::pi / static_cast<double>(steps);
  auto osc = symplectic_reference(H("(q^2+p^2)/2"), {1}, {0}, cfg(dt, steps));
  CHECK(std::fabs(osc.back().q[0] - 1.0) < 1e-8);
  CHECK(std::fabs(osc.back().p[0]) < 1e-8);
}

TEST_CASE("integrator configuration") {
  CHECK_THROWS_AS(cfg(0, 10).validate(), InvalidArgument);
  CHECK_THROWS_AS(cfg(-1, 10).validate(), InvalidArgument);
  CHECK_THROWS_AS(cfg(NAN, 10).validate(), InvalidArgument);
  CHECK_THROWS_AS(cfg(0.1, 0).validate(), InvalidArgument);
  CHECK_THROWS_AS(cfg(1e305, 100000).validate(), InvalidArgument);
  CHECK(parse_method("euler") == Method::kEuler);
  CHECK_THROWS_AS(parse_method("leapfrog"), InvalidArgument);
}

TEST_CASE("blow-up truncates the trajectory") {
  // dz/dt = z^2 from z = 1 blows up at t = 1.
  auto traj = integrate(H("-z^2"), S(0, 0, 1), cfg(0.01, 200));
  CHECK(traj.truncated);
  CHECK(traj.samples.size() < 201);
  CHECK(traj.samples.back().t < 1.1);
  CHECK_THROWS_AS(traj.require_complete(), NumericOverflow);
  for (const auto& s : traj.samples) CHECK(std::isfinite(s.drift));
}

TEST_CASE("newtonian energy") {
  auto I = [](std::size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  CHECK(newtonian_energy(I(1), Polynomial(1)).h() == H("p^2/2").h());
  auto q = Polynomial::variable(1, 0);
  CHECK(newtonian_energy(I(1), q * q * Rational(1, 2)).h() == H("(q^2+p^2)/2").h());
  CHECK(newtonian_energy({{Rational(2)}}, Polynomial(1)).h() == H("p^2/4").h());
  RationalMatrix m{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  auto h = newtonian_energy(m, Polynomial(2));
  // Oracle: 1/2 p^T M^-1 p with M^-1 = [[3,-1],[-1,2]]/5.
  CHECK(h.h() == H("3/10 p1^2 - 1/5 p1 p2 + 1/5 p2^2", 2).h());
  CHECK(h.z_invariant());
  auto inv = inverse(m);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational sum(0);
      for (std::size_t k = 0; k < 2; ++k) sum += m[i][k] * inv[k][j];
      CHECK(sum == Rational(i == j ? 1 : 0));
    }
  CHECK_THROWS_AS(newtonian_energy({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
                                   Polynomial(2)),
                  SingularMatrix);
  CHECK_THROWS_AS(newtonian_energy({{Rational(-1)}}, Polynomial(1)), InvalidArgument);
  CHECK_THROWS_AS(newtonian_energy({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}},
                                   Polynomial(2)),
                  InvalidArgument);
  CHECK_THROWS_AS(newtonian_energy(I(2), Polynomial(1)), InvalidArgument);
  CHECK_THROWS_AS(inverse({{Rational(0)}}), SingularMatrix);
}

TEST_CASE("csv and svg output") {
  auto traj = integrate(H("z"), S(0, 1, 1), cfg(0.5, 2));
  std::ostringstream csv;
  write_csv(csv, traj);
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "t,q_1,p_1,z,h,drift");
  std::getline(lines, row);
  CHECK(row.rfind("0,0,1,1,1,", 0) == 0);
  int count = 1;
  while (std::getline(lines, row)) ++count;
  CHECK(count == 3);
  auto two = integrate(H("z", 2), ContactState({0, 0}, {1, 1}, 1), cfg(0.5, 1));
  std::ostringstream csv2;
  write_csv(csv2, two);
  CHECK(csv2.str().rfind("t,q_1,q_2,p_1,p_2,z,h,drift\n", 0) == 0);
  std::ostringstream svg;
  write_svg(svg, traj);
  CHECK(svg.str().rfind("<svg", 0) == 0);
  CHECK(svg.str().find("<polyline") != std::string::npos);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
}
