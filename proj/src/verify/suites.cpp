#include "dimjac/verify/suites.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "dimjac/dynamics/hamiltonian.hpp"
#include "dimjac/dynamics/integrator.hpp"
#include "dimjac/errors.hpp"
#include "dimjac/jacobi/coisotropic.hpp"
#include "dimjac/jacobi/product.hpp"
#include "dimjac/lang/evaluator.hpp"
#include "dimjac/lang/format.hpp"
#include "dimjac/measurand/line.hpp"
#include "dimjac/measurand/quantity.hpp"

namespace dimjac::verify {

void CheckResult::fail(const std::string& message) {
  if (ok) detail = message;
  ok = false;
}

void CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  if (!other.ok) fail(other.detail);
}

namespace {

UnitSystemPtr load_system(const std::filesystem::path& data_dir, const char* name) {
  return std::make_shared<const UnitSystem>(UnitSystem::load(data_dir / name));
}

UnitSystemPtr rank_system(std::size_t k, std::span<const Rational> scales = {}) {
  std::vector<UnitSystem::BaseSpec> base;
  for (std::size_t i = 0; i < k; ++i)
    base.push_back({"L" + std::to_string(i), "u" + std::to_string(i),
                    scales.empty() ? Rational(1) : scales[i]});
  return std::make_shared<const UnitSystem>(std::move(base), std::vector<DerivedUnit>{});
}

std::string join_ok(const CheckResult& r, const std::string& summary) {
  return r.ok ? summary : r.detail;
}

void finish(CheckResult& r, const std::string& summary) {
  r.detail = join_ok(r, summary);
}

}  // namespace

// ---------------------------------------------------------------- measurand

CheckResult cup_fill(const std::filesystem::path& data_dir) {
  CheckResult r;
  const std::string expr = "(300 cm^3)/(4.3 L/min)";
  auto kitchen = load_system(data_dir, "kitchen.json");
  auto si = load_system(data_dir, "si.json");
  auto exact = lang::evaluate<Rational>(expr, kitchen);
  std::string text = lang::format_quantity(exact);
  ++r.cases;
  if (text != "3/43 min") r.fail("exact cup fill time is '" + text + "', expected '3/43 min'");
  auto minutes = lang::evaluate<double>(expr, kitchen);
  ++r.cases;
  if (std::fabs(minutes.magnitude() - 0.0698) > kCupMinutesTol)
    r.fail("float cup fill time " + format_double(minutes.magnitude()) + " min");
  auto seconds = lang::evaluate<double>(expr, si);
  ++r.cases;
  if (std::fabs(seconds.magnitude() - 4.186) > kCupSecondsTol)
    r.fail("float cup fill time " + format_double(seconds.magnitude()) + " s");
  auto converted = convert(exact, si);
  ++r.cases;
  if (lang::format_quantity(converted) != "180/43 s")
    r.fail("conversion gave '" + lang::format_quantity(converted) + "'");
  finish(r, text + ", " + format_double(minutes.magnitude()) + " min, " +
                format_double(seconds.magnitude()) + " s");
  return r;
}

CheckResult field_axioms(Rng& rng, std::size_t triples) {
  CheckResult r;
  auto sys = rank_system(3);
  auto quantity = [&](const DimVector& dim) {
    return ExactQuantity(random_rational(rng, 30, 12), dim, sys);
  };
  for (std::size_t i = 0; i < triples; ++i) {
    auto x = quantity(random_dim(rng, 3)), y = quantity(random_dim(rng, 3)),
         z = quantity(random_dim(rng, 3));
    auto y2 = quantity(y.dim());
    ++r.cases;
    if ((x * y) * z != x * (y * z)) r.fail("associativity fails");
    if (x * y != y * x) r.fail("commutativity fails");
    if (x * (y + y2) != x * y + x * y2) r.fail("distributivity fails");
    if (y + y2 != y2 + y) r.fail("homogeneous addition is not commutative");
    if ((x * y).dim() != x.dim() + y.dim()) r.fail("dimension projection is not additive");
    if (ExactQuantity::zero(x.dim(), sys) * y != ExactQuantity::zero(x.dim() + y.dim(), sys))
      r.fail("zero does not absorb");
    if (!r.ok) {
      r.detail += " at triple " + std::to_string(i);
      break;
    }
  }
  finish(r, std::to_string(r.cases) + " triples");
  return r;
}

CheckResult two_out_of_three(Rng& rng, std::size_t triples) {
  CheckResult r;
  Line line("L");
  for (std::size_t i = 0; i < triples; ++i) {
    Line moved = line.rescaled(random_rational(rng, 9, 9, true));
    auto a = random_rational(rng, 50, 20, true) * line.reference<Rational>();
    auto b = random_rational(rng, 50, 20, true) * moved.reference<Rational>();
    auto c = random_rational(rng, 50, 20, true) * line.reference<Rational>();
    ++r.cases;
    if (ratio(a.on(line), b.on(line)) * ratio(b.on(line), c) * ratio(c, a) != 1) {
      r.fail("2-out-of-3 fails at triple " + std::to_string(i));
      break;
    }
  }
  finish(r, std::to_string(r.cases) + " line triples");
  return r;
}

CheckResult trivialization(Rng& rng, std::size_t count) {
  CheckResult r;
  auto source = rank_system(3);
  std::vector<Rational> scales;
  for (int i = 0; i < 3; ++i) {
    Rational s = random_rational(rng, 99, 20, true);
    scales.push_back(s < 0 ? Rational(-s) : s);
  }
  auto units = rank_system(3, scales);
  for (std::size_t i = 0; i < count; ++i) {
    ExactQuantity x(random_rational(rng, 30, 12), random_dim(rng, 3), source);
    ExactQuantity y(random_rational(rng, 30, 12), random_dim(rng, 3), source);
    auto tx = trivialize(*units, x), ty = trivialize(*units, y);
    ++r.cases;
    if (convert(untrivialize(units, tx), source) != x) r.fail("untrivialize is not a left inverse");
    if (trivialize(*units, untrivialize(units, tx)) != tx)
      r.fail("untrivialize is not a right inverse");
    auto txy = trivialize(*units, x * y);
    if (txy.value != tx.value * ty.value || txy.dim != tx.dim + ty.dim)
      r.fail("trivialization is not multiplicative");
    if (x != y && tx == ty) r.fail("trivialization is not injective");
    if (!r.ok) {
      r.detail += " at sample " + std::to_string(i);
      break;
    }
  }
  finish(r, std::to_string(r.cases) + " quantities");
  return r;
}

// ---------------------------------------------------------------- jacobi

namespace {

bool bracket_jacobi_holds(Rng& rng, const LichnerowiczStructure& l, std::size_t triples) {
  for (std::size_t i = 0; i < triples; ++i) {
    auto f = random_polynomial(rng, 3, 3), g = random_polynomial(rng, 3, 3),
         h = random_polynomial(rng, 3, 3);
    auto lhs = jacobi_bracket(l, f, jacobi_bracket(l, g, h));
    auto rhs = jacobi_bracket(l, jacobi_bracket(l, f, g), h) +
               jacobi_bracket(l, g, jacobi_bracket(l, f, h));
    if (lhs != rhs) return false;
  }
  return true;
}

bool dimensioned_jacobi_holds(Rng& rng, const LichnerowiczStructure& l, std::size_t triples) {
  for (std::size_t i = 0; i < triples; ++i) {
    auto a = random_section(rng, 3, -3, 3, 2), b = random_section(rng, 3, -3, 3, 2),
         c = random_section(rng, 3, -3, 3, 2);
    auto lhs = dimensioned_bracket(l, a, dimensioned_bracket(l, b, c));
    auto rhs = dimensioned_bracket(l, dimensioned_bracket(l, a, b), c) +
               dimensioned_bracket(l, b, dimensioned_bracket(l, a, c));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

CheckResult jacobi_equivalence(Rng& rng, std::size_t pairs, std::size_t triples) {
  CheckResult r;
  std::size_t jacobi_count = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    auto l = random_pair(rng, static_cast<int>(i));
    bool pair = is_jacobi_pair(l).ok;
    bool identity = bracket_jacobi_holds(rng, l, triples);
    bool extension = check_extension_conditions(l).all();
    bool dimensioned = dimensioned_jacobi_holds(rng, l, triples);
    ++r.cases;
    if (pair) ++jacobi_count;
    if (identity != pair || extension != pair || dimensioned != pair) {
      std::ostringstream msg;
      msg << "pair " << i << " disagrees: is_jacobi_pair=" << pair
          << " bracket=" << identity << " extension=" << extension
          << " dimensioned=" << dimensioned;
      r.fail(msg.str());
    }
  }
  finish(r, std::to_string(r.cases) + " pairs (" + std::to_string(jacobi_count) +
                " Jacobi), zero disagreements");
  return r;
}

namespace {

// Base-case definitions under the trivialization by the unit u = 1. A
// section of weight -1 with body A pairs with a weight 1 section b as A b;
// Lambda#(df (x) a)[g] = a pi(df, dg) and X_a[g] = pi(da, dg) + a R[g].
struct BaseCases {
  const LichnerowiczStructure& l;

  Polynomial X(const Polynomial& a, const Polynomial& g) const {
    return bivector_pairing(l, a, g) + a * l.r().apply(g);
  }
  Polynomial squiggle(const Polynomial& f, const Polynomial& a, const Polynomial& g) const {
    return a * bivector_pairing(l, f, g);
  }
  Polynomial bracket(const Polynomial& a, const Polynomial& b) const {
    return jacobi_bracket(l, a, b);
  }
};

}  // namespace

CheckResult base_case_conformance(Rng& rng) {
  CheckResult r;
  std::vector<LichnerowiczStructure> structures{canonical_darboux(1),
                                                LichnerowiczStructure::zero(3)};
  for (int i = 0; i < 4; ++i) structures.push_back(random_pair(rng, i % 2));
  auto probes = monomial_probes(3, 2);
  std::vector<Polynomial> tests{Polynomial::constant(3, Rational(1)), Polynomial::variable(3, 0),
                                Polynomial::variable(3, 1) * Polynomial::variable(3, 2) +
                                    Polynomial::constant(3, Rational(2)),
                                random_polynomial(rng, 3, 2, 3)};
  for (const auto& l : structures) {
    BaseCases base{l};
    auto check = [&](bool good, const char* weights, const Polynomial& f,
                     const Polynomial& g) {
      ++r.cases;
      if (!good)
        r.fail(std::string("weights ") + weights + " disagree for F = " +
               f.to_string(l.names()) + ", G = " + g.to_string(l.names()));
    };
    for (const auto& f : probes)
      for (const auto& g : probes) {
        // (1,1): the Jacobi bracket itself.
        auto b11 = dimensioned_bracket(l, {1, f}, {1, g});
        check(b11.weight == 1 && b11.body == base.bracket(f, g), "(1,1)", f, g);
        // (1,0): {a, f} = X_a[f].
        auto b10 = dimensioned_bracket(l, {1, f}, {0, g});
        check(b10.weight == 0 && b10.body == base.X(f, g), "(1,0)", f, g);
        // (0,0): {f, g}(a) = Lambda#(df (x) a)[g].
        auto b00 = dimensioned_bracket(l, {0, f}, {0, g});
        bool ok00 = b00.weight == -1;
        for (const auto& a : tests) ok00 = ok00 && b00.body * a == base.squiggle(f, a, g);
        check(ok00, "(0,0)", f, g);
        // (1,-1): {a, alpha}(c) = X_a[alpha(c)] - alpha({a, c}).
        auto b1m = dimensioned_bracket(l, {1, f}, {-1, g});
        bool ok1m = b1m.weight == -1;
        for (const auto& c : tests)
          ok1m = ok1m && b1m.body * c == base.X(f, g * c) - g * base.bracket(f, c);
        check(ok1m, "(1,-1)", f, g);
        // (0,-1): {f, alpha}(a, b) = Lambda#(df (x) a)[alpha(b)] + X_b[f] alpha(a).
        auto b0m = dimensioned_bracket(l, {0, f}, {-1, g});
        bool ok0m = b0m.weight == -2;
        for (const auto& a : tests)
          for (const auto& b : tests)
            ok0m = ok0m && b0m.body * a * b == base.squiggle(f, a, g * b) + base.X(b, f) * g * a;
        check(ok0m, "(0,-1)", f, g);
        // (-1,-1) in both stated orderings:
        //   Lambda#(d alpha(a) (x) c)[beta(b)] + X_b[alpha(a)] beta(c) - ...
        //   Lambda#(d alpha(a) (x) b)[beta(c)] + X_c[alpha(a)] beta(b) - ...
        // each followed by - alpha(b) X_a[beta(c)] + alpha(b) beta({a, c}).
        auto bmm = dimensioned_bracket(l, {-1, f}, {-1, g});
        bool okmm = bmm.weight == -3;
        for (const auto& a : tests)
          for (const auto& b : tests)
            for (const auto& c : tests) {
              Polynomial alpha_a = f * a, alpha_b = f * b, beta_b = g * b, beta_c = g * c;
              Polynomial tail = -alpha_b * base.X(a, beta_c) + alpha_b * g * base.bracket(a, c);
              Polynomial first = base.squiggle(alpha_a, c, beta_b) + base.X(b, alpha_a) * beta_c + tail;
              Polynomial second = base.squiggle(alpha_a, b, beta_c) + base.X(c, alpha_a) * beta_b + tail;
              Polynomial body = bmm.body * a * b * c;
              okmm = okmm && body == first && body == second;
            }
        check(okmm, "(-1,-1)", f, g);
        if (!r.ok) return r;
      }
  }
  finish(r, std::to_string(r.cases) + " probe pairs over " +
                std::to_string(structures.size()) + " structures");
  return r;
}

CheckResult product_relations(const LichnerowiczStructure& l1, const LichnerowiczStructure& l2) {
  CheckResult r;
  const std::size_t n1 = l1.dimension(), n2 = l2.dimension();
  auto l12 = product_jacobi(l1, l2);
  BaseCases f1{l1}, f2{l2}, f12{l12};
  auto P1 = [&](const Polynomial& s) { return pullback_first(s, n1, n2); };
  auto P2 = [&](const Polynomial& s) { return pullback_second(s, n1, n2); };
  auto p1 = [&](const Polynomial& f) { return base_function_first(f, n1, n2); };
  auto p2 = [&](const Polynomial& f) { return base_function_second(f, n1, n2); };
  auto ab = [&](const Polynomial& a, const Rational& b) {
    return ratio_first_second(a, b, n1, n2);
  };
  auto ba = [&](const Polynomial& b, const Rational& a) {
    return ratio_second_first(b, a, n1, n2);
  };
  auto c1 = [&](const Rational& v) { return Polynomial::constant(n1, v); };
  auto c2 = [&](const Rational& v) { return Polynomial::constant(n2, v); };
  auto zero12 = Polynomial(l12.dimension());

  auto probes1 = monomial_probes(n1, 2);
  auto probes2 = monomial_probes(n2, 2);
  // Units are nonvanishing constants here: ratio functions with a
  // nonconstant denominator leave the Laurent-in-t model.
  const Rational units[] = {Rational(1), Rational(-2), Rational(3, 5)};

  auto check = [&](bool good, const std::string& what) {
    ++r.cases;
    if (!good) r.fail(what);
  };

  for (const auto& s : probes1)
    for (const auto& s2 : probes1) {
      check(f12.bracket(P1(s), P1(s2)) == P1(f1.bracket(s, s2)), "{P1 s, P1 s'} = P1 {s, s'}");
      check(f12.X(P1(s), p1(s2)) == p1(f1.X(s, s2)), "X_{P1 s}[p1 f] = p1 X_s[f]");
      for (const auto& g : probes1)
        check(f12.squiggle(p1(s2), P1(s), p1(g)) == p1(f1.squiggle(s2, s, g)),
              "Lambda(dp1 f (x) P1 s)[p1 g] = p1 Lambda(df (x) s)[g]");
      for (const Rational& b : units) {
        check(f12.X(P1(s), ab(s2, b)) == ab(f1.bracket(s, s2), b), "X_{P1 s}[a/b] = {s,a}/b");
        check(p1(s2) * ab(s, b) == ab(s2 * s, b), "p1 f s/b = (f s)/b");
        check(P1(s) == ab(s, b) * P2(c2(b)), "P1 s = (s/b) P2 b");
        for (const auto& a : probes1)
          check(f12.squiggle(p1(a), P1(s), ab(s2, b)) == -p1(f1.X(s2, a)) * ab(s, b),
                "Lambda(dp1 f (x) P1 s)[a/b] = -p1 X_a[f] s/b");
        for (const auto& a2 : probes1)
          for (const Rational& b2 : units)
            check(f12.squiggle(ab(s2, b), P1(s), ab(a2, b2)) ==
                      ab(f1.bracket(s2, a2), b) * ab(s, b2),
                  "Lambda(d(a/b) (x) P1 s)[a'/b'] = ({a,a'}/b)(s/b')");
      }
    }
  for (const auto& s : probes2)
    for (const auto& s2 : probes2) {
      check(f12.bracket(P2(s), P2(s2)) == P2(f2.bracket(s, s2)), "{P2 s, P2 s'} = P2 {s, s'}");
      check(f12.X(P2(s), p2(s2)) == p2(f2.X(s, s2)), "X_{P2 s}[p2 f] = p2 X_s[f]");
      for (const auto& g : probes2)
        check(f12.squiggle(p2(s2), P2(s), p2(g)) == p2(f2.squiggle(s2, s, g)),
              "Lambda(dp2 f (x) P2 s)[p2 g] = p2 Lambda(df (x) s)[g]");
      for (const Rational& a : units) {
        check(f12.X(P2(s), ba(s2, a)) == ba(f2.bracket(s, s2), a), "X_{P2 s}[b/a] = {s,b}/a");
        check(p2(s2) * ba(s, a) == ba(s2 * s, a), "p2 f s/a = (f s)/a");
        check(P2(s) == ba(s, a) * P1(c1(a)), "P2 s = (s/a) P1 a");
        for (const auto& b : probes2)
          check(f12.squiggle(p2(b), P2(s), ba(s2, a)) == -p2(f2.X(s2, b)) * ba(s, a),
                "Lambda(dp2 f (x) P2 s)[b/a] = -p2 X_b[f] s/a");
        for (const auto& b2 : probes2)
          for (const Rational& a2 : units)
            check(f12.squiggle(ba(s2, a), P2(s), ba(b2, a2)) ==
                      ba(f2.bracket(s2, b2), a) * ba(s, a2),
                  "Lambda(d(b/a) (x) P2 s)[b'/a'] = ({b,b'}/a)(s/a')");
      }
    }
  for (const auto& s1 : probes1)
    for (const auto& s2 : probes2) {
      check(f12.bracket(P1(s1), P2(s2)).is_zero(), "{P1 s1, P2 s2} = 0");
      check(f12.X(P1(s1), p2(s2)).is_zero(), "X_{P1 s1}[p2 f2] = 0");
      check(f12.X(P2(s2), p1(s1)).is_zero(), "X_{P2 s2}[p1 f1] = 0");
      for (const auto& f : probes1)
        for (const auto& g : probes2) {
          check(f12.squiggle(p1(f), P1(s1), p2(g)) == zero12,
                "Lambda(dp1 f1 (x) P1 s1)[p2 g2] = 0");
          check(f12.squiggle(p2(g), P2(s2), p1(f)) == zero12,
                "Lambda(dp2 f2 (x) P2 s2)[p1 g1] = 0");
          check(f12.squiggle(p1(f), P2(s2), p2(g)) == zero12,
                "Lambda(dp1 f1 (x) P2 s2)[p2 g2] = 0");
          check(f12.squiggle(p2(g), P1(s1), p1(f)) == zero12,
                "Lambda(dp2 f2 (x) P1 s1)[p1 g1] = 0");
        }
      for (const Rational& a : units)
        for (const Rational& b : units) {
          for (const auto& f : probes1) {
            check(f12.squiggle(p1(f), P2(s2), ba(c2(b), a)) ==
                      p1(f1.X(c1(a), f)) * ba(s2, a) * ba(c2(b), a),
                  "Lambda(dp1 f (x) P2 s)[b/a] = p1 X_a[f] (s/a)(b/a)");
            for (const auto& g : probes1)
              check(f12.squiggle(p1(f), P2(s2), p1(g)) ==
                        -p1(f1.squiggle(g, c1(a), f)) * ba(s2, a),
                    "Lambda(dp1 f (x) P2 s)[p1 g] = -p1 Lambda(dg (x) a)[f] s/a");
          }
          for (const auto& f : probes2) {
            check(f12.squiggle(p2(f), P1(s1), ab(c1(a), b)) ==
                      p2(f2.X(c2(b), f)) * ab(s1, b) * ab(c1(a), b),
                  "Lambda(dp2 f (x) P1 s)[a/b] = p2 X_b[f] (s/b)(a/b)");
            for (const auto& g : probes2)
              check(f12.squiggle(p2(f), P1(s1), p2(g)) ==
                        -p2(f2.squiggle(g, c2(b), f)) * ab(s1, b),
                    "Lambda(dp2 f (x) P1 s)[p2 g] = -p2 Lambda(dg (x) b)[f] s/b");
          }
        }
    }
  ++r.cases;
  auto jacobi = is_jacobi_pair(l12);
  if (!jacobi.ok) r.fail("product is not a Jacobi pair: " + jacobi.witness);
  return r;
}

CheckResult product_cases() {
  CheckResult r;
  auto relations = product_relations(canonical_symplectic(1), LichnerowiczStructure::zero(0));
  r.merge(relations);
  auto zero = product_jacobi(LichnerowiczStructure::zero(2), LichnerowiczStructure::zero(1));
  ++r.cases;
  if (!zero.pi().is_zero() || !zero.r().is_zero()) r.fail("zero x zero is not zero");
  finish(r, std::to_string(r.cases) + " relations and checks");
  return r;
}

CheckResult coisotropic_cases() {
  CheckResult r;
  auto s = canonical_symplectic(2);  // q1, q2, p1, p2
  auto expect = [&](std::vector<std::size_t> zero, bool ok, const std::string& witness,
                    const std::string& label) {
    auto c = is_coisotropic(s, {std::move(zero)});
    ++r.cases;
    if (c.ok != ok || (!ok && c.witness != witness))
      r.fail(label + ": got " + (c.ok ? "true" : "false (" + c.witness + ")"));
  };
  expect({3}, true, "", "{p2=0}");
  expect({2, 3}, true, "", "{p1=0,p2=0}");
  expect({1, 3}, false, "X_{q2} = ∂p2 not tangent", "{q2=0,p2=0}");
  finish(r, "{p2=0} true, {p1=0,p2=0} true, {q2=0,p2=0} false with tangency witness");
  return r;
}

// ---------------------------------------------------------------- dynamics

CheckResult contact_field_identity(Rng& rng, std::size_t count) {
  CheckResult r;
  auto pair = canonical_darboux(1);
  for (std::size_t i = 0; i < count; ++i) {
    auto h = random_polynomial(rng, 3, 3, 5);
    HamiltonianSpec spec(1, h);
    auto x = hamiltonian_vf(pair, h);
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t idx[] = {k};
      ++r.cases;
      if (spec.field()[k] != x.component(idx))
        r.fail("component " + std::to_string(k) + " differs for h = " +
               h.to_string(spec.names()));
    }
  }
  finish(r, std::to_string(count) + " hamiltonians");
  return r;
}

namespace {

double state_error(const ContactState& s, double q, double p, double z) {
  return std::max({std::fabs(s.q()[0] - q), std::fabs(s.p()[0] - p), std::fabs(s.z() - z)});
}

double decay_error(double dt, long steps) {
  auto traj = integrate(HamiltonianSpec::parse(1, "z"), ContactState({0}, {1}, 1),
                        IntegratorConfig{dt, steps, Method::kRk4});
  double e = std::exp(-dt * static_cast<double>(steps));
  return state_error(traj.samples.back().state, 0, e, e);
}

}  // namespace

CheckResult contact_dynamics() {
  CheckResult r;
  std::ostringstream summary;
  auto free = HamiltonianSpec::parse(1, "p^2/2");
  auto traj = integrate(free, ContactState({0}, {1}, 0), IntegratorConfig{1e-3, 1000});
  double free_err = state_error(traj.samples.back().state, 1, 1, 0.5);
  ++r.cases;
  if (!(free_err < kFreeParticleTol))
    r.fail("free particle error " + format_double(free_err));
  double decay = decay_error(1e-3, 1000);
  ++r.cases;
  if (!(decay < kDecayTol)) r.fail("h = z error " + format_double(decay));
  // The free particle is integrated exactly by rk4, so the order is measured
  // on the exponential decay.
  double ratio = decay_error(0.1, 10) / decay_error(0.05, 20);
  ++r.cases;
  if (!(ratio >= kOrderRatioLow && ratio <= kOrderRatioHigh))
    r.fail("rk4 error ratio " + format_double(ratio));
  double worst = 0;
  for (const char* text : {"p^2/2", "(q^2+p^2)/2", "p^2/2 + q^4/4 - q^2", "q p^2 + 1/3 q^3"}) {
    auto h = HamiltonianSpec::parse(1, text);
    IntegratorConfig cfg{1e-2, 100};
    auto contact = integrate(h, ContactState({0.3}, {-0.4}, 0.9), cfg);
    auto ref = symplectic_reference(h, {0.3}, {-0.4}, cfg);
    ++r.cases;
    if (ref.size() != contact.samples.size()) {
      r.fail(std::string("reference length differs for h = ") + text);
      continue;
    }
    for (std::size_t k = 0; k < ref.size(); ++k) {
      worst = std::max({worst, std::fabs(ref[k].q[0] - contact.samples[k].state.q()[0]),
                        std::fabs(ref[k].p[0] - contact.samples[k].state.p()[0])});
    }
  }
  if (!(worst <= kReductionTol)) r.fail("reduction mismatch " + format_double(worst));
  summary << "free " << format_double(free_err) << ", decay " << format_double(decay)
          << ", order ratio " << format_double(ratio) << ", reduction " << format_double(worst);
  finish(r, summary.str());
  return r;
}

// ---------------------------------------------------------------- language

namespace {

std::string fuzz_input(Rng& rng) {
  static const char* const kFragments[] = {
      "1",  "2.5", "3/4", "1e3", "0",   "-",  "+",   "*",   "/",   "^",  "(",  ")",
      " ",  "m",   "cm",  "L",   "min", "s",  "atm", "K",   "mol", "Pa", "h",  "·",
      "×",  "÷",   "−",   "x",   "@",   "^64", "^-3", "1e999", "^999", "9999999999", ".", "e",
      "mL", "Hz",  "μ",   "\xff", "\t", "_",  "²",   "1/0", "0/0",  "((", "))"};
  std::uniform_int_distribution<int> length(0, 16);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kFragments) - 1);
  std::uniform_int_distribution<int> byte(1, 255), coin(0, 19);
  std::string s;
  int n = length(rng);
  for (int i = 0; i < n; ++i) {
    if (coin(rng) == 0)
      s.push_back(static_cast<char>(byte(rng)));
    else
      s += kFragments[pick(rng)];
  }
  return s;
}

// Well-formed expression over the kitchen units, built from the grammar.
std::string grammar_input(Rng& rng, int depth) {
  static const char* const kUnits[] = {"cm", "L", "min", "s", "atm", "K", "mol", "mL", "m", "h", "Pa"};
  static const char* const kNumbers[] = {"1", "2.5", "3/4", "0.001", "1e3", "42", "7/3"};
  std::uniform_int_distribution<int> choice(0, 9), unit(0, std::size(kUnits) - 1),
      number(0, std::size(kNumbers) - 1), exponent(-3, 3);
  int c = depth > 3 ? 0 : choice(rng);
  if (c <= 3) {
    std::string lit = kNumbers[number(rng)];
    if (c >= 1) lit += std::string(" ") + kUnits[unit(rng)];
    if (c >= 2) lit += "^" + std::to_string(exponent(rng));
    if (c == 3) lit += std::string("/") + kUnits[unit(rng)];
    return lit;
  }
  static const char* const kOps[] = {" + ", " - ", " * ", " / ", "·", "×"};
  if (c <= 7)
    return grammar_input(rng, depth + 1) + kOps[c - 4 + (choice(rng) % 3 == 0 ? 2 : 0)] +
           grammar_input(rng, depth + 1);
  if (c == 8) return "(" + grammar_input(rng, depth + 1) + ")^" + std::to_string(exponent(rng));
  return "-(" + grammar_input(rng, depth + 1) + ")";
}

// A grammatical input with up to two random byte edits.
std::string mutated_input(Rng& rng) {
  std::string s = grammar_input(rng, 0);
  std::uniform_int_distribution<int> edits(0, 2), kind(0, 2), byte(32, 126);
  for (int e = edits(rng); e > 0 && !s.empty(); --e) {
    std::uniform_int_distribution<std::size_t> at(0, s.size() - 1);
    std::size_t i = at(rng);
    switch (kind(rng)) {
      case 0: s.erase(i, 1); break;
      case 1: s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), static_cast<char>(byte(rng))); break;
      default: s[i] = static_cast<char>(byte(rng));
    }
  }
  return s;
}

}  // namespace

CheckResult parser_fuzz(Rng& rng, std::size_t count, const std::filesystem::path& data_dir) {
  CheckResult r;
  auto system = load_system(data_dir, "kitchen.json");
  std::size_t values = 0, errors = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::string input = i % 4 < 2 ? fuzz_input(rng) : mutated_input(rng);
    ++r.cases;
    try {
      if (i % 2 == 0)
        lang::evaluate<double>(input, system);
      else
        lang::evaluate<Rational>(input, system);
      ++values;
    } catch (const LexError& e) {
      ++errors;
      if (e.offset() > input.size()) r.fail("lex error offset out of range for '" + input + "'");
    } catch (const ParseError& e) {
      ++errors;
      if (e.offset() > input.size())
        r.fail("parse error offset out of range for '" + input + "'");
    } catch (const Error&) {
      ++errors;
    } catch (const std::exception& e) {
      r.fail("unstructured exception for '" + input + "': " + e.what());
    }
  }
  finish(r, std::to_string(count) + " inputs, " + std::to_string(values) + " values, " +
                std::to_string(errors) + " structured errors");
  return r;
}

CheckResult format_round_trip(Rng& rng, std::size_t count, const std::filesystem::path& data_dir) {
  CheckResult r;
  std::vector<UnitSystemPtr> systems{load_system(data_dir, "kitchen.json"),
                                     load_system(data_dir, "si.json"),
                                     load_system(data_dir, "gas.json")};
  for (std::size_t i = 0; i < count; ++i) {
    const auto& sys = systems[i % systems.size()];
    DimVector dim = random_dim(rng, sys->rank(), 3);
    ExactQuantity q(random_rational(rng, 999, 97), dim, sys);
    for (auto style : {lang::FormatStyle::kCanonical, lang::FormatStyle::kBase}) {
      std::string text = lang::format_quantity(q, style);
      ++r.cases;
      if (lang::evaluate<Rational>(text, sys) != q) r.fail("'" + text + "' does not read back");
    }
    Quantity d(to_double(q.magnitude()), dim, sys);
    std::string text = lang::format_quantity(d, lang::FormatStyle::kBase);
    ++r.cases;
    if (lang::evaluate<double>(text, sys) != d) r.fail("'" + text + "' does not read back");
    if (!r.ok) break;
  }
  finish(r, std::to_string(r.cases) + " round trips");
  return r;
}

// ---------------------------------------------------------------- registry

std::vector<Suite> acceptance_suites(const std::filesystem::path& data_dir, std::uint64_t seed) {
  return {
      {"1", "cup-fill regression", 0.1, [=] { return cup_fill(data_dir); }},
      {"2", "dimensioned field axioms", 10.0,
       [=] {
         Rng rng(seed + 2);
         auto r = field_axioms(rng, 10000);
         auto detail = r.detail;
         auto lines = two_out_of_three(rng, 10000);
         r.merge(lines);
         if (r.ok) r.detail = detail + ", " + lines.detail;
         return r;
       }},
      {"3", "trivialization isomorphism", 5.0,
       [=] {
         Rng rng(seed + 3);
         return trivialization(rng, 1000);
       }},
      {"4", "Jacobi equivalence", 60.0,
       [=] {
         Rng rng(seed + 4);
         return jacobi_equivalence(rng, 20, 100);
       }},
      {"5", "base-case conformance of the dimensioned bracket", 60.0,
       [=] {
         Rng rng(seed + 5);
         return base_case_conformance(rng);
       }},
      {"6", "product structure relations", 60.0, [] { return product_cases(); }},
      {"7", "coisotropic predicate", 5.0, [] { return coisotropic_cases(); }},
      {"8", "contact dynamics", 30.0,
       [=] {
         Rng rng(seed + 8);
         auto r = contact_field_identity(rng, 50);
         auto detail = r.detail;
         auto dyn = contact_dynamics();
         r.merge(dyn);
         if (r.ok) r.detail = detail + "; " + dyn.detail;
         return r;
       }},
      {"9", "parser robustness", 60.0,
       [=] {
         Rng rng(seed + 9);
         auto r = parser_fuzz(rng, 100000, data_dir);
         auto detail = r.detail;
         auto trip = format_round_trip(rng, 1000, data_dir);
         r.merge(trip);
         if (r.ok) r.detail = detail + "; " + trip.detail;
         return r;
       }},
  };
}

SuiteReport run_suite(const Suite& suite) {
  auto start = std::chrono::steady_clock::now();
  CheckResult result;
  try {
    result = suite.run();
  } catch (const std::exception& e) {
    result.fail(std::string("unexpected exception: ") + e.what());
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {&suite, std::move(result), seconds};
}

}  // namespace dimjac::verify
